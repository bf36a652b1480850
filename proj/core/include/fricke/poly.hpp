#pragma once

// Sparse polynomials in Z[x, y, z] with arbitrary-precision coefficients.

#include "fricke/numbers.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fricke {

enum class Var : std::uint8_t { x = 0, y = 1, z = 2 };

/// x^i y^j z^k packed so that integer order is graded lex order with x > y > z.
/// Layout: [degree:16 | i:16 | j:16 | k:16].
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(std::uint32_t i, std::uint32_t j, std::uint32_t k);

  static Monomial var(Var v, std::uint32_t power = 1);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(bits_ >> 48); }
  std::uint32_t exponent(Var v) const {
    return static_cast<std::uint32_t>(bits_ >> (32 - 16 * static_cast<int>(v))) & 0xffffu;
  }
  std::array<std::uint32_t, 3> exponents() const {
    return {exponent(Var::x), exponent(Var::y), exponent(Var::z)};
  }

  friend Monomial operator*(Monomial p, Monomial q);
  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial mono;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class UniPoly;

class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT: integer constants read naturally in formulas
  Poly(const Integer& c);  // NOLINT
  Poly(Monomial m, Integer c);

  static Poly var(Var v, std::uint32_t power = 1) { return Poly(Monomial::var(v, power), 1); }
  static Poly x() { return var(Var::x); }
  static Poly y() { return var(Var::y); }
  static Poly z() { return var(Var::z); }

  /// Builds a polynomial from arbitrary terms; combines duplicates, drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  /// Terms in graded lex descending order, all coefficients nonzero.
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(Var v) const;
  Integer coefficient(Monomial m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Integer& c) { return p *= c; }
  friend Poly operator*(const Integer& c, Poly p) { return p *= c; }

  Poly times_monomial(Monomial m) const;
  Poly pow(unsigned k) const;

  /// Replace one variable by an integer value.
  Poly substitute(Var v, const Integer& value) const;

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;
  Integer evaluate(const Integer& x, const Integer& y, const Integer& z) const;
  double evaluate(double x, double y, double z) const;
  std::complex<double> evaluate(std::complex<double> x, std::complex<double> y,
                                std::complex<double> z) const;

  /// Canonical text, e.g. "x^2*z - 3*z + x".
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  // Sorted by descending monomial.
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// t -> y embedding of an integral univariate polynomial.
/// Throws std::domain_error on a non-integer coefficient.
Poly compose_in_y(const UniPoly& u);

/// S_k(y) as an element of Z[x, y, z].
Poly chebyshev_y(std::int64_t k);

}  // namespace fricke
