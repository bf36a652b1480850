#include "fricke/charring.hpp"

#include "fricke/random_words.hpp"
#include "fricke/trace.hpp"

#include <random>
#include <stdexcept>

namespace fricke {

namespace {

Poly P(const Word& u) { return trace_poly(u); }

const Word kA = Word::a();
const Word kW = Word::w();

// f(u) = P_{lhs u} - P_{rhs u} for the relation lhs = rhs.
struct RelatorDifference {
  Word lhs;
  Word rhs;

  Poly operator()(const Word& u) const { return P(lhs * u) - P(rhs * u); }
};

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::four_general: return "four-general";
    case Family::thm1: return "thm1";
    case Family::thm2: return "thm2";
    case Family::thm5: return "thm5";
    case Family::thm6: return "thm6";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::four_general, Family::thm1, Family::thm2, Family::thm5, Family::thm6})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown generator family '" + name + "'");
}

Presentation thm1_presentation(const Word& r, std::int64_t n) {
  return {Word::w(n) * r.reversed(), r.inverse() * Word::w(n - 1)};
}

Presentation thm2_presentation(const Word& r, std::int64_t n) {
  return {Word::w(n) * r.reversed(), r.inverse() * Word::w(n - 2)};
}

GeneratorSet four_generators(const Presentation& p) {
  const RelatorDifference f{p.lhs, p.rhs};
  return {{f(Word{}), f(kA), f(kW), f(kW * kA)}, Family::four_general};
}

GeneratorSet thm1_generators(const Word& r, std::int64_t n) {
  const Word rr = r.reversed();
  const Word ri = r.inverse();
  Poly q = P(rr) - P(ri * Word::w(-1));
  Poly fa = P(Word::w(n) * rr * kA) - P(ri * Word::w(n - 1) * kA);
  return {{std::move(q), std::move(fa)}, Family::thm1};
}

GeneratorSet thm2_generators(const Word& r, std::int64_t n) {
  const Word rr = r.reversed();
  const Word ri = r.inverse();
  const Word aW = kA * Word::w(-1);
  Poly q = P(rr) - P(ri * Word::w(-2));
  Poly f = P(Word::w(n) * rr * aW) - P(ri * Word::w(n - 2) * aW);
  return {{std::move(q), std::move(f)}, Family::thm2};
}

GeneratorSet thm5_generators(const Word& r) {
  const Word rr = r.reversed();
  const Word ri = r.inverse();
  return {{P(rr) - P(ri * Word::w(-1)), P(rr * kA) - P(ri * Word::w(-1) * kA)}, Family::thm5};
}

GeneratorSet thm6_generators(const Word& r) {
  const Word rr = r.reversed();
  const Word ri = r.inverse();
  const Word aW = kA * Word::w(-1);
  return {{P(rr) - P(ri * Word::w(-2)), P(rr * aW) - P(ri * Word::w(-2) * aW)}, Family::thm6};
}

std::vector<Word> structured_u_pool() {
  return {Word{}, kA, kW, kA * kW, kW * kA, kA * Word::w(-1), kW * Word::a(-1)};
}

std::vector<Word> default_u_pool(std::uint64_t seed, std::size_t count, std::size_t max_syllables) {
  std::vector<Word> pool = structured_u_pool();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) pool.push_back(random_word(rng, max_syllables, 3));
  return pool;
}

// ---------------------------------------------------------------------------

Certificate verify_thm1_reduction(const Word& r, std::int64_t n, std::span<const Word> u_pool) {
  Certificate cert("w^(n-1) family reduction r=" + r.to_string() + " n=" + std::to_string(n));
  const Word rr = r.reversed();
  const Word ri = r.inverse();
  const Word w_inv = Word::w(-1);
  const Poly y = Poly::y();
  const Poly q = P(rr) - P(ri * w_inv);

  const auto family = [&](std::int64_t m) {
    return RelatorDifference{Word::w(m) * rr, ri * Word::w(m - 1)};
  };
  const RelatorDifference f = family(n);

  for (const Word& u : u_pool) {
    cert.add_identity("backward[u=" + u.to_string() + "]", f(u.reversed()),
                      f(u * w_inv) - P(u * Word::w(n - 1)) * q);
  }
  cert.add_identity("f(w)", f(kW), f(Word{}) - P(Word::w(n)) * q);
  cert.add_identity("f(wa)", f(kW * kA), f(kA) - P(kA * Word::w(n)) * q);
  cert.add_identity("f(1)", f(Word{}), -(chebyshev_y(n - 1) + chebyshev_y(n - 2)) * q);
  cert.add_identity("g-recurrence", family(n + 1)(Word{}),
                    y * f(Word{}) - family(n - 1)(Word{}));
  return cert;
}

Certificate verify_thm1_reduction(const Word& r, std::int64_t n) {
  const auto pool = default_u_pool();
  return verify_thm1_reduction(r, n, pool);
}

Certificate verify_thm2_reduction(const Word& r, std::int64_t n, std::span<const Word> u_pool) {
  Certificate cert("w^(n-2) family reduction r=" + r.to_string() + " n=" + std::to_string(n));
  const Word rr = r.reversed();
  const Word ri = r.inverse();
  const Word w_inv = Word::w(-1);
  const Word w_inv2 = Word::w(-2);
  const Poly y = Poly::y();
  const Poly q = P(rr) - P(ri * w_inv2);
  const RelatorDifference f{Word::w(n) * rr, ri * Word::w(n - 2)};
  const Poly f1 = f(Word{});
  const Poly fw = f(kW);

  cert.add_identity("rw-palindrome-trace", P(r * kW), P(rr * kW));
  for (const Word& u : u_pool) {
    const std::string tag = "[u=" + u.to_string() + "]";
    const Word conj = kW * u * w_inv;
    cert.add_identity("backward" + tag, f(u.reversed()), f(conj));
    cert.add_identity("sum" + tag, f(u) + f(conj),
                      -P(u * w_inv2) * f1 + P(u * w_inv) * fw + y * f(u * w_inv));
  }
  cert.add_identity("f(1)", f1, -chebyshev_y(n - 2) * q);
  cert.add_identity("f(w)", fw, -chebyshev_y(n - 1) * q);
  const Word aW = kA * w_inv;
  cert.add_identity("2f(a)", Poly(2) * f(kA),
                    -P(kA * w_inv2) * f1 + P(aW) * fw + y * f(aW));
  return cert;
}

Certificate verify_thm2_reduction(const Word& r, std::int64_t n) {
  const auto pool = default_u_pool();
  return verify_thm2_reduction(r, n, pool);
}

Certificate verify_four_generator_reduction(const Presentation& p) {
  Certificate cert("four-generator reduction " + p.to_string());
  const RelatorDifference f{p.lhs, p.rhs};
  for (std::int64_t ea : {1, -1}) {
    for (std::int64_t ew : {1, -1}) {
      const Word c = Word::a(ea);
      const Word d = Word::w(ew);
      cert.add_identity("four-word[c=" + c.to_string() + ",d=" + d.to_string() + "]",
                        f(c * d) + f(d * c),
                        -P(c * d.inverse()) * f(Word{}) + P(c) * f(d) + P(d) * f(c));
    }
  }
  return cert;
}

}  // namespace fricke
