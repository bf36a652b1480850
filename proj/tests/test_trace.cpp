#include "fricke/random_words.hpp"
#include "fricke/sl2_oracle.hpp"
#include "fricke/trace.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace fricke;

namespace {

const Poly x = Poly::x();
const Poly y = Poly::y();
const Poly z = Poly::z();

Poly P(const char* s) { return trace_poly(parse_word(s)); }

}  // namespace

TEST(Trace, Examples) {
  EXPECT_EQ(P("a"), x);
  EXPECT_EQ(P("aW"), x * y - z);
  EXPECT_EQ(P("aaw"), x * z - y);
  EXPECT_EQ(P("awAW"), x * x + y * y + z * z - x * y * z - Poly(2));
  EXPECT_EQ(P("1"), Poly(2));
  EXPECT_EQ(P("w^2"), y * y - Poly(2));
  EXPECT_EQ(P("A^3"), x.pow(3) - Poly(3) * x);
}

TEST(Trace, PowerTrace) {
  for (std::int64_t k = -6; k <= 6; ++k) {
    EXPECT_EQ(power_trace(z, k), power_trace(z, -k));
    EXPECT_EQ(P(("(aw)^" + std::to_string(k)).c_str()), power_trace(z, k));
  }
  EXPECT_EQ(power_trace(x, 0), Poly(2));
}

TEST(Trace, AgreesWithAlgebraOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const Word u = random_word(rng, 12, 4);
    EXPECT_EQ(trace_poly(u), oracle::algebra_trace(u)) << u;
  }
}

TEST(Trace, MatrixOracle) {
  EXPECT_TRUE(oracle_check(parse_word("a"), 100));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(oracle_check(random_word(rng, 20, 4), 100));
}

TEST(Trace, IdentitiesTr1ToTr4) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(rng, 8, 3), v = random_word(rng, 8, 3), g = random_word(rng, 3, 2);
    EXPECT_EQ(trace_poly(u), trace_poly(u.inverse()));
    EXPECT_EQ(trace_poly(u * v), trace_poly(v * u));
    EXPECT_EQ(trace_poly(v * u) + trace_poly(v * u.inverse()), trace_poly(u) * trace_poly(v));
    EXPECT_EQ(trace_poly(u * g * v) + trace_poly(u * g.inverse() * v), trace_poly(g) * trace_poly(u * v));
  }
}

TEST(Trace, ReversedProductLemma) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(rng, 8, 3), v = random_word(rng, 8, 3);
    EXPECT_EQ(trace_poly(u * v), trace_poly(u.reversed() * v.reversed()));
    EXPECT_EQ(trace_poly(u), trace_poly(u.reversed()));
  }
}

TEST(Trace, FourWordIdentity) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const Word u = random_word(rng, 6, 3), c = random_word(rng, 3, 2), d = random_word(rng, 3, 2);
    EXPECT_EQ(trace_poly(u * c * d) + trace_poly(u * d * c),
              -trace_poly(c * d.inverse()) * trace_poly(u) + trace_poly(c) * trace_poly(u * d) +
                  trace_poly(d) * trace_poly(u * c));
  }
}

TEST(Trace, StrategiesAgreeAndDegreeBound) {
  std::mt19937_64 rng(23);
  TraceEngine left(Strategy::leftmost);
  TraceEngine right(Strategy::rightmost);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 14, 4);
    const Poly p = left.trace(u);
    EXPECT_EQ(p, right.trace(u));
    EXPECT_LE(p.total_degree(), u.weight());
  }
  EXPECT_GT(left.rewrites(), 0u);
}

TEST(Trace, SharedCacheAcrossThreads) {
  auto cache = std::make_shared<TraceCache>();
  std::vector<Word> words;
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) words.push_back(random_word(rng, 10, 3));
  std::vector<std::vector<Poly>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      TraceEngine engine(t % 2 ? Strategy::leftmost : Strategy::rightmost, cache);
      for (const Word& u : words) results[t].push_back(engine.trace(u));
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Poly expected = oracle::algebra_trace(words[i]);
    for (const auto& r : results) EXPECT_EQ(r[i], expected);
  }
}

TEST(Sl2Oracle, RandomPairs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Sl2Pair p = random_sl2_pair(seed);
    EXPECT_EQ(p.a.determinant(), 1);
    EXPECT_EQ(p.w.determinant(), 1);
    const Sl2Pair q = random_sl2_pair(seed);
    EXPECT_EQ(p.a, q.a);
    EXPECT_EQ(p.w, q.w);
  }
  EXPECT_THROW(Sl2Matrix(1, 1, 1, 1), std::domain_error);
}

TEST(Sl2Oracle, MatrixAlgebra) {
  const Sl2Matrix m = Sl2Matrix::upper_shear(3) * Sl2Matrix::lower_shear(-2);
  EXPECT_EQ(m * m.inverse(), Sl2Matrix::identity());
  EXPECT_EQ(m.pow(3), m * m * m);
  EXPECT_EQ(m.pow(-2), m.inverse() * m.inverse());
  EXPECT_EQ(Sl2Matrix::upper_shear(0), Sl2Matrix::identity());

  const Sl2Pair p = random_sl2_pair(4);
  EXPECT_EQ(evaluate_word(parse_word("aW"), p), p.a * p.w.inverse());
  EXPECT_EQ(evaluate_word(parse_word("1"), p), Sl2Matrix::identity());
}
