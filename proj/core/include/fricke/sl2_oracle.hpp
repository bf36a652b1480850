#pragma once

// Exact matrix oracle for trace polynomials. Identities in Z[x, y, z] are
// witnessed by evaluating at traces of random exact SL2(Q) pairs.

#include "fricke/numbers.hpp"
#include "fricke/word.hpp"

#include <cstdint>
#include <utility>

namespace fricke {

class Sl2Matrix {
 public:
  Sl2Matrix() : a_(1), b_(0), c_(0), d_(1) {}
  /// Throws std::domain_error unless ad - bc == 1.
  Sl2Matrix(Rational a, Rational b, Rational c, Rational d);

  static Sl2Matrix identity() { return {}; }
  static Sl2Matrix upper_shear(long p) { return {1, p, 0, 1}; }
  static Sl2Matrix lower_shear(long q) { return {1, 0, q, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational trace() const { return a_ + d_; }
  Rational determinant() const { return a_ * d_ - b_ * c_; }
  Sl2Matrix inverse() const;
  Sl2Matrix pow(std::int64_t k) const;

  friend Sl2Matrix operator*(const Sl2Matrix& l, const Sl2Matrix& r);
  friend bool operator==(const Sl2Matrix&, const Sl2Matrix&) = default;

 private:
  struct Unchecked {};
  Sl2Matrix(Unchecked, Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Rational a_, b_, c_, d_;
};

struct Sl2Pair {
  Sl2Matrix a;
  Sl2Matrix w;
};

/// Deterministic per seed. Each matrix is a product of 3-6 alternating
/// elementary shears with integer parameters in [-5, 5].
Sl2Pair random_sl2_pair(std::uint64_t seed);

/// The image of u under a -> A, w -> W.
Sl2Matrix evaluate_word(const Word& u, const Sl2Pair& rep);

/// Compares tr(u(A, W)) with P_u(tr A, tr W, tr AW) on `trials` seeded pairs.
bool oracle_check(const Word& u, int trials = 100, std::uint64_t seed = 0);

}  // namespace fricke
