#include "fricke/poly.hpp"

#include "fricke/unipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fricke {

namespace {

constexpr std::uint32_t kMaxExponent = 0xffff;

}  // namespace

Monomial::Monomial(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  const std::uint32_t deg = i + j + k;
  if (deg > kMaxExponent) throw std::overflow_error("monomial degree exceeds 65535");
  bits_ = (std::uint64_t{deg} << 48) | (std::uint64_t{i} << 32) | (std::uint64_t{j} << 16) |
          std::uint64_t{k};
}

Monomial Monomial::var(Var v, std::uint32_t power) {
  switch (v) {
    case Var::x: return Monomial(power, 0, 0);
    case Var::y: return Monomial(0, power, 0);
    case Var::z: return Monomial(0, 0, power);
  }
  return {};
}

Monomial operator*(Monomial p, Monomial q) {
  if (p.degree() + q.degree() > kMaxExponent) throw std::overflow_error("monomial degree exceeds 65535");
  return Monomial(p.bits_ + q.bits_);
}

// ---------------------------------------------------------------------------

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

Poly::Poly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly::Poly(Monomial m, Integer c) {
  if (c != 0) terms_.push_back({m, std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.mono > r.mono; });
  Poly out;
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int Poly::degree_in(Var v) const {
  int best = -1;
  for (const Term& t : terms_) best = std::max(best, static_cast<int>(t.mono.exponent(v)));
  return best;
}

Integer Poly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merge two descending term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& p, const std::vector<Term>& q, int sign) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() && j != q.end()) {
    if (i->mono > j->mono) {
      out.push_back(*i++);
    } else if (j->mono > i->mono) {
      out.push_back({j->mono, sign > 0 ? j->coeff : Integer(-j->coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->coeff + j->coeff) : Integer(i->coeff - j->coeff);
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != p.end(); ++i) out.push_back(*i);
  for (; j != q.end(); ++j) out.push_back({j->mono, sign > 0 ? j->coeff : Integer(-j->coeff)});
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, q.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, q.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& q) { return *this = *this * q; }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly{};
  if (q.size() == 1) return p.times_monomial(q.terms_[0].mono) * q.terms_[0].coeff;
  if (p.size() == 1) return q.times_monomial(p.terms_[0].mono) * p.terms_[0].coeff;
  const Poly& outer = p.size() <= q.size() ? p : q;
  const Poly& inner = p.size() <= q.size() ? q : p;
  // Each row outer_i * inner is already sorted, so accumulate row by row.
  Poly acc;
  for (const Term& t : outer.terms_) acc += inner.times_monomial(t.mono) * t.coeff;
  return acc;
}

Poly Poly::times_monomial(Monomial m) const {
  Poly out = *this;
  for (Term& t : out.terms_) t.mono = t.mono * m;
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(Var v, const Integer& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  Integer power;
  for (const Term& t : terms_) {
    auto e = t.mono.exponents();
    const auto idx = static_cast<std::size_t>(v);
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e[idx]);
    e[idx] = 0;
    out.push_back({Monomial(e[0], e[1], e[2]), t.coeff * power});
  }
  return from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Evaluation: nested Horner over x, then y, then z. Each step multiplies by a
// point coordinate, which keeps big-number work linear in the operand size.

namespace {

template <class T>
T convert(const Integer& c) {
  if constexpr (std::is_same_v<T, Integer>) {
    return c;
  } else if constexpr (std::is_same_v<T, Rational>) {
    return Rational(c);
  } else {
    return T(c.get_d());
  }
}

template <class T>
void horner_step(T& acc, const T& value, std::uint32_t gap) {
  for (std::uint32_t g = 0; g < gap; ++g) acc *= value;
}

template <class T>
T evaluate_nested(std::span<const Term> terms, const T& x, const T& y, const T& z) {
  if (terms.empty()) return T(0);
  std::vector<const Term*> order;
  order.reserve(terms.size());
  for (const Term& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* l, const Term* r) {
    return l->mono.exponents() > r->mono.exponents();
  });

  T acc_x(0);
  std::uint32_t prev_i = order.front()->mono.exponent(Var::x);
  std::size_t pos = 0;
  while (pos < order.size()) {
    const std::uint32_t i = order[pos]->mono.exponent(Var::x);
    T acc_y(0);
    std::uint32_t prev_j = order[pos]->mono.exponent(Var::y);
    while (pos < order.size() && order[pos]->mono.exponent(Var::x) == i) {
      const std::uint32_t j = order[pos]->mono.exponent(Var::y);
      T acc_z(0);
      std::uint32_t prev_k = order[pos]->mono.exponent(Var::z);
      while (pos < order.size() && order[pos]->mono.exponent(Var::x) == i &&
             order[pos]->mono.exponent(Var::y) == j) {
        const std::uint32_t k = order[pos]->mono.exponent(Var::z);
        horner_step(acc_z, z, prev_k - k);
        acc_z += convert<T>(order[pos]->coeff);
        prev_k = k;
        ++pos;
      }
      horner_step(acc_z, z, prev_k);
      horner_step(acc_y, y, prev_j - j);
      acc_y += acc_z;
      prev_j = j;
    }
    horner_step(acc_y, y, prev_j);
    horner_step(acc_x, x, prev_i - i);
    acc_x += acc_y;
    prev_i = i;
  }
  horner_step(acc_x, x, prev_i);
  return acc_x;
}

}  // namespace

Rational Poly::evaluate(const Rational& x_in, const Rational& y_in, const Rational& z_in) const {
  // GMP rational arithmetic assumes canonical operands.
  Rational x = x_in, y = y_in, z = z_in;
  x.canonicalize();
  y.canonicalize();
  z.canonicalize();
  if (x.get_den() == 1 && y.get_den() == 1 && z.get_den() == 1)
    return Rational(evaluate(Integer(x.get_num()), Integer(y.get_num()), Integer(z.get_num())));
  return evaluate_nested<Rational>(terms_, x, y, z);
}

Integer Poly::evaluate(const Integer& x, const Integer& y, const Integer& z) const {
  return evaluate_nested<Integer>(terms_, x, y, z);
}

double Poly::evaluate(double x, double y, double z) const {
  return evaluate_nested<double>(terms_, x, y, z);
}

std::complex<double> Poly::evaluate(std::complex<double> x, std::complex<double> y,
                                    std::complex<double> z) const {
  return evaluate_nested<std::complex<double>>(terms_, x, y, z);
}

// ---------------------------------------------------------------------------

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kNames[] = {"x", "y", "z"};
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Integer magnitude = abs(t.coeff);
    std::string factors;
    const auto e = t.mono.exponents();
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += kNames[v];
      if (e[v] > 1) factors += '^' + std::to_string(e[v]);
    }
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + '*' + factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly compose_in_y(const UniPoly& u) {
  if (!u.has_integer_coefficients())
    throw std::domain_error("compose_in_y: coefficient of " + u.to_string() + " is not an integer");
  std::vector<Term> terms;
  const auto& c = u.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({Monomial(0, static_cast<std::uint32_t>(i), 0), Integer(c[i].get_num())});
  return Poly::from_terms(std::move(terms));
}

Poly chebyshev_y(std::int64_t k) { return compose_in_y(chebyshev(k, 'y')); }

}  // namespace fricke
