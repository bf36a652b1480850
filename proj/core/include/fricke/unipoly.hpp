#pragma once

// Dense univariate polynomials over Q, plus the Chebyshev family S_k.

#include "fricke/numbers.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fricke {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}
  /// Coefficients lowest degree first; trailing zeros are trimmed.
  UniPoly(std::vector<Rational> coeffs, char var = 't');

  static UniPoly constant(const Rational& c, char var = 't');
  static UniPoly monomial(const Rational& c, unsigned degree, char var = 't');
  static UniPoly variable(char var = 't') { return monomial(1, 1, var); }

  char var() const { return var_; }
  UniPoly with_var(char var) const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i (zero past the degree).
  Rational coeff(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& q);
  UniPoly& operator-=(const UniPoly& q);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly p, const UniPoly& q) { return p += q; }
  friend UniPoly operator-(UniPoly p, const UniPoly& q) { return p -= q; }
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(UniPoly p, const Rational& c) { return p *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly p) { return p *= c; }

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  bool has_integer_coefficients() const;

  std::string to_string() const;

  /// Equality ignores the variable tag.
  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
  char var_ = 't';
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q. Throws std::domain_error if d is zero.
DivMod divmod(const UniPoly& n, const UniPoly& d);

/// Monic gcd over Q. Throws std::domain_error if both inputs are zero.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

inline UniPoly uni_derivative(const UniPoly& p) { return p.derivative(); }

/// h with h*h == p over Q (positive leading coefficient), if one exists.
std::optional<UniPoly> is_perfect_square(const UniPoly& p);

/// S_k(t): S_0 = 1, S_1 = t, S_{k+1} = t S_k - S_{k-1}, for every integer k.
UniPoly chebyshev(std::int64_t k, char var = 't');

}  // namespace fricke
