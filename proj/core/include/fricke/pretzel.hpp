#pragma once

// The (-2, 2m+1, 2n+1)-pretzel knot groups as one-relator groups
// <a, w | <-r w r = 1>, and the closed forms for the (-2, 3, 2n+1) family.

#include "fricke/certificate.hpp"
#include "fricke/charring.hpp"
#include "fricke/poly.hpp"
#include "fricke/word.hpp"

#include <cstdint>

namespace fricke {

struct PretzelWords {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Word u;  // (a w a w^-1)^(1-m) w
  Word s;
  Word r;

  /// <-r w r, the palindromic relator.
  Word relator() const { return r.reversed() * Word::w() * r; }
  friend bool operator==(const PretzelWords&, const PretzelWords&) = default;
};

PretzelWords pretzel_words(std::int64_t m, std::int64_t n);

/// The two-relation form the knot group starts from after eliminating b, c:
/// u^n a w a^-1 w^-1 a^-1 = a^-1 w^-1 a w a u^(n-1).
Presentation pretzel_presentation(std::int64_t m, std::int64_t n);

/// u == <-s w s and u is a palindrome.
bool verify_lemma31(std::int64_t m);

/// <-r w r equals the conjugated relator word, and is conjugate (up to
/// inversion) to lhs * rhs^-1 of pretzel_presentation(m, n).
bool verify_prop32(std::int64_t m, std::int64_t n);

/// thm5_generators(pretzel_words(m, n).r).
GeneratorSet pretzel_generators(std::int64_t m, std::int64_t n);

/// Q = x - xy + (x^2 + y^2 - 3) z - x y z^2 + z^3.
Poly explicit_Q();

/// R_n assembled from Chebyshev polynomials in y:
///   S_{n-2} + S_{n-3} - S_{n-4} - S_{n-5} - S_{n-2} x^2
///   + (S_{n-1} + S_{n-3} + S_{n-4}) x z - (S_{n-2} + S_{n-3}) z^2
Poly explicit_Rn(std::int64_t n);

/// The same R_n written with S_{n-2} and S_{n-3} only:
///   (y+2) S_{n-2} - (y^2+y-2) S_{n-3} - S_{n-2} x^2
///   + ((y-1) S_{n-2} + y S_{n-3}) x z - (S_{n-2} + S_{n-3}) z^2
Poly explicit_Rn_reduced(std::int64_t n);

/// The relator word r = a^-1 w^-1 a^-1 w a of the (-2, 3, 2n+1) family.
Word pretzel_r_word();

/// thm1_generators(a^-1 w^-1 a^-1 w a, n) == [explicit_Q(), explicit_Rn(n)].
Certificate verify_thm3(std::int64_t n);

}  // namespace fricke
