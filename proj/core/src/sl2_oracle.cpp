#include "fricke/sl2_oracle.hpp"

#include "fricke/trace.hpp"

#include <random>
#include <stdexcept>

namespace fricke {

Sl2Matrix::Sl2Matrix(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() != 1) throw std::domain_error("Sl2Matrix: determinant is not 1");
}

Sl2Matrix Sl2Matrix::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

Sl2Matrix Sl2Matrix::pow(std::int64_t k) const {
  Sl2Matrix base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Sl2Matrix result;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Sl2Matrix operator*(const Sl2Matrix& l, const Sl2Matrix& r) {
  return {Sl2Matrix::Unchecked{}, l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

namespace {

// Own mapping from raw engine output so draws do not depend on the standard
// library's distribution implementation.
long draw_in(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Sl2Matrix random_shear_product(std::mt19937_64& rng) {
  const long count = draw_in(rng, 3, 6);
  bool upper = draw_in(rng, 0, 1) == 0;
  Sl2Matrix m;
  for (long i = 0; i < count; ++i) {
    const long param = draw_in(rng, -5, 5);
    m = m * (upper ? Sl2Matrix::upper_shear(param) : Sl2Matrix::lower_shear(param));
    upper = !upper;
  }
  return m;
}

}  // namespace

Sl2Pair random_sl2_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Sl2Matrix a = random_shear_product(rng);
  Sl2Matrix w = random_shear_product(rng);
  return {std::move(a), std::move(w)};
}

Sl2Matrix evaluate_word(const Word& u, const Sl2Pair& rep) {
  Sl2Matrix out;
  for (const Syllable& s : u.syllables()) out = out * (s.gen == Gen::a ? rep.a : rep.w).pow(s.exp);
  return out;
}

bool oracle_check(const Word& u, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("oracle_check: trials must be at least 1");
  const Poly p = trace_poly(u);
  for (int t = 0; t < trials; ++t) {
    const Sl2Pair rep = random_sl2_pair(seed * 1000003u + static_cast<std::uint64_t>(t));
    const Rational x = rep.a.trace();
    const Rational y = rep.w.trace();
    const Rational z = (rep.a * rep.w).trace();
    if (evaluate_word(u, rep).trace() != p.evaluate(x, y, z)) return false;
  }
  return true;
}

}  // namespace fricke
