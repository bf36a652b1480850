#pragma once

// Irreducible components of the character variety of the (-2, 3, 2n+1)
// pretzel knot, V = {Q = R_n = 0}.
//
// Away from z = 0 and alpha = 0, eliminating x from R_n leaves
//   alpha^2 Q / z = (-2 + 3y - y^3 + z^2) T(y, z),
//   T = t0(y) + t2(y) z^2 + z^4,
// and T is irreducible once t0 has positive degree and is not a square (up to
// a constant) and 4 + S_{n-2}^2 is not a square. t0 is not square-free when
// n = 1 mod 3: both of its Chebyshev factors vanish at y = 1. Each factor then carries one component; when
// 3 | 2n+1 the line {z = 0, y = 1} is a third.

#include "fricke/certificate.hpp"
#include "fricke/poly.hpp"
#include "fricke/unipoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fricke {

struct VarietyData {
  std::int64_t n = 0;
  Poly Q;
  Poly Rn;
  /// (z^2 + y - 1) S_{n-2} - y z^2 S_{n-3}
  Poly alpha;
  /// (y^2 + y - 1) S_{n-2} - (y^2 + y - 2 + z^2) S_{n-3}
  Poly beta;
  UniPoly t0;
  UniPoly t2;
  Poly T;
  /// R_n restricted to x = z = 0.
  UniPoly p;
  /// Resultant-style condition for alpha = beta = 0.
  UniPoly q;
};

VarietyData build_variety_data(std::int64_t n);

/// The cubic factor -2 + 3y - y^3 + z^2.
Poly cubic_factor();

/// Exact polynomial identities of the elimination; valid for every integer n.
Certificate identity_suite(std::int64_t n);

/// Non-square checks that certify T irreducible. The degree of
/// gcd(t0, t0') is reported as output "t0_repeated_degree".
/// Throws TorusKnotError for n in {0, 1, 2}.
Certificate irreducibility_certificate(std::int64_t n);

struct ComponentReport {
  std::int64_t n = 0;
  int count = 0;
  std::vector<std::string> components;
  Certificate certificate;
};

/// Throws TorusKnotError for n in {0, 1, 2}; throws std::runtime_error if the
/// irreducibility certificate fails.
ComponentReport component_report(std::int64_t n);

/// 2 if gcd(2n+1, 3) == 1, else 3.
int component_count(std::int64_t n);

/// Floating point check of the root formulas
///   S_{n-2}(y) = prod_{j=1}^{n-2} (y - 2 cos(j pi / (n-1))),
///   S_{n-3}(y) - S_{n-4}(y) = prod_{j=1}^{n-3} (y - 2 cos((2j-1) pi / (2n-5))).
/// Throws ParameterError for n < 4 or tol <= 0.
Certificate numeric_spotchecks(std::int64_t n, double tol);

}  // namespace fricke
