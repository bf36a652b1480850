#include "fricke/unipoly.hpp"

#include <cmath>
#include <stdexcept>

namespace fricke {

UniPoly::UniPoly(std::vector<Rational> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c, char var) { return UniPoly({c}, var); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree, char var) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs), var);
}

UniPoly UniPoly::with_var(char var) const {
  UniPoly out = *this;
  out.var_ = var;
  return out;
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly(p.var_);
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return UniPoly(std::move(out), p.var_);
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(var_);
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const Rational lead = leading();
  for (Rational& c : out.coeffs_) c /= lead;
  return out;
}

bool UniPoly::has_integer_coefficients() const {
  for (const Rational& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    std::string power;
    if (idx >= 1) power = std::string(1, var_);
    if (idx >= 2) power += '^' + std::to_string(idx);
    if (power.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.get_str() + '*' + power;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

DivMod divmod(const UniPoly& n, const UniPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = n.coeffs();
  const int dd = d.degree();
  const int nd = n.degree();
  if (nd < dd) return {UniPoly(n.var()), n};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1), Rational(0));
  const Rational& lead = d.leading();
  for (int k = nd - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot), n.var()), UniPoly(std::move(rem), n.var())};
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials is undefined");
  UniPoly a = p;
  UniPoly b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

std::optional<UniPoly> is_perfect_square(const UniPoly& p) {
  if (p.is_zero()) return p;
  const int deg = p.degree();
  if (deg % 2 != 0) return std::nullopt;

  // Leading coefficient must be the square of a rational.
  const Rational& lead = p.leading();
  if (lead < 0) return std::nullopt;
  if (!mpz_perfect_square_p(lead.get_num_mpz_t()) || !mpz_perfect_square_p(lead.get_den_mpz_t()))
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), lead.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), lead.get_den_mpz_t());

  // Match coefficients of h^2 against p from the top down: the coefficient of
  // t^(2m - i) determines h_{m-i} once the higher ones are known.
  const auto half = static_cast<std::size_t>(deg / 2);
  std::vector<Rational> h(half + 1, Rational(0));
  h[half] = Rational(num, den);
  h[half].canonicalize();
  for (std::size_t i = 1; i <= half; ++i) {
    const std::size_t target = 2 * half - i;
    Rational known(0);
    for (std::size_t j = half - i + 1; j <= half; ++j) {
      const std::size_t partner = target - j;
      if (partner > half || partner < half - i + 1) continue;
      known += h[j] * h[partner];
    }
    h[half - i] = (p.coeff(target) - known) / (2 * h[half]);
  }
  UniPoly candidate(std::move(h), p.var());
  if (candidate * candidate == p) return candidate;
  return std::nullopt;
}

UniPoly chebyshev(std::int64_t k, char var) {
  const UniPoly t = UniPoly::variable(var);
  UniPoly prev = UniPoly::constant(1, var);  // S_0
  if (k == 0) return prev;
  if (k > 0) {
    UniPoly cur = t;  // S_1
    for (std::int64_t i = 1; i < k; ++i) {
      UniPoly next = t * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Run backwards: S_{i-1} = t S_i - S_{i+1}.
  UniPoly upper = t;  // S_1
  UniPoly cur = prev;  // S_0
  for (std::int64_t i = 0; i > k; --i) {
    UniPoly lower = t * cur - upper;
    upper = std::move(cur);
    cur = std::move(lower);
  }
  return cur;
}

}  // namespace fricke
