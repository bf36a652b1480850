#include "fricke/charring.hpp"
#include "fricke/pretzel.hpp"
#include "fricke/trace.hpp"
#include "fricke/unipoly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

using namespace fricke;

namespace {

using cd = std::complex<double>;

const Poly x = Poly::x();
const Poly y = Poly::y();
const Poly z = Poly::z();

Word W(const char* s) { return parse_word(s); }

Poly S(std::int64_t k) { return chebyshev_y(k); }

// Newton in (y, z) with x held fixed; finite-difference Jacobian.
std::optional<std::array<cd, 3>> solve_pair(const Poly& f, const Poly& g, cd x0, cd y0, cd z0) {
  cd yy = y0, zz = z0;
  const double h = 1e-7;
  for (int it = 0; it < 100; ++it) {
    const cd fv = f.evaluate(x0, yy, zz), gv = g.evaluate(x0, yy, zz);
    if (std::abs(fv) + std::abs(gv) < 1e-13) return std::array<cd, 3>{x0, yy, zz};
    const cd fy = (f.evaluate(x0, yy + h, zz) - fv) / h, fz = (f.evaluate(x0, yy, zz + h) - fv) / h;
    const cd gy = (g.evaluate(x0, yy + h, zz) - gv) / h, gz = (g.evaluate(x0, yy, zz + h) - gv) / h;
    const cd det = fy * gz - fz * gy;
    if (std::abs(det) < 1e-14) return std::nullopt;
    yy -= (fv * gz - fz * gv) / det;
    zz -= (fy * gv - fv * gy) / det;
    if (std::abs(yy) > 1e6 || std::abs(zz) > 1e6) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

TEST(PretzelWords, Examples) {
  const PretzelWords m1 = pretzel_words(1, 3);
  EXPECT_TRUE(m1.s.is_identity());
  EXPECT_EQ(m1.u, W("w"));

  const PretzelWords m0 = pretzel_words(0, 1);
  EXPECT_EQ(m0.s, W("a"));
  EXPECT_EQ(m0.u, W("awa"));

  const PretzelWords m2 = pretzel_words(2, 1);
  EXPECT_EQ(m2.s, W("WAw"));
  EXPECT_EQ(m2.u, W("wAWAw"));
  EXPECT_EQ(m2.u, m2.s.reversed() * Word::w() * m2.s);
}

TEST(PretzelWords, EvenAndOddBranches) {
  // n = 2k: r = s u^(k-1) awaWA u^-k ; n = 2k+1: r = s u^k awAWA u^-k.
  const PretzelWords even = pretzel_words(3, -4);
  const Word u = even.u;
  EXPECT_EQ(even.r, even.s * u.pow(-3) * W("awaWA") * u.pow(2));
  const PretzelWords odd = pretzel_words(-1, 5);
  EXPECT_EQ(odd.r, odd.s * odd.u.pow(2) * W("awAWA") * odd.u.pow(-2));
}

TEST(PretzelWords, Lemmas) {
  for (std::int64_t m = -4; m <= 5; ++m) EXPECT_TRUE(verify_lemma31(m)) << m;
  for (std::int64_t m = -2; m <= 3; ++m) {
    for (std::int64_t n = -2; n <= 3; ++n) {
      EXPECT_TRUE(verify_prop32(m, n)) << m << "," << n;
      EXPECT_TRUE(pretzel_words(m, n).relator().is_palindrome());
    }
  }
}

TEST(PretzelWords, PresentationRelatorConjugacy) {
  for (std::int64_t m = -2; m <= 3; ++m) {
    for (std::int64_t n = -2; n <= 3; ++n) {
      const Presentation p = pretzel_presentation(m, n);
      EXPECT_TRUE(conjugate_up_to_inversion(pretzel_words(m, n).relator(), p.lhs * p.rhs.inverse()));
    }
  }
}

TEST(PretzelGenerators, PalindromicForm) {
  for (std::int64_t m = -1; m <= 2; ++m) {
    for (std::int64_t n = -1; n <= 2; ++n) {
      const Word r = pretzel_words(m, n).r;
      const GeneratorSet g = pretzel_generators(m, n);
      ASSERT_EQ(g.generators.size(), 2u);
      EXPECT_EQ(g.generators[0], oracle::algebra_trace(r.reversed()) - oracle::algebra_trace(r.inverse() * Word::w(-1)));
      EXPECT_EQ(g.generators[1], oracle::algebra_trace(r.reversed() * Word::a()) -
                                     oracle::algebra_trace(r.inverse() * Word::w(-1) * Word::a()));
      EXPECT_FALSE(g.generators[1].is_zero());
    }
  }
}

TEST(ClosedForms, Q) {
  const Poly q = explicit_Q();
  EXPECT_EQ(q.size(), 7u);
  EXPECT_EQ(q, x - x * y + x * x * z + y * y * z - Poly(3) * z - x * y * z * z + z.pow(3));
}

TEST(ClosedForms, RnSmallN) {
  EXPECT_EQ(explicit_Rn(2), Poly(2) + y - x * x + (y - Poly(1)) * x * z - z * z);
  for (std::int64_t n = -3; n <= 6; ++n) {
    const Poly expected = S(n - 2) + S(n - 3) - S(n - 4) - S(n - 5) - S(n - 2) * x * x +
                          (S(n - 1) + S(n - 3) + S(n - 4)) * x * z - (S(n - 2) + S(n - 3)) * z * z;
    EXPECT_EQ(explicit_Rn(n), expected) << n;
    EXPECT_EQ(explicit_Rn(n), explicit_Rn_reduced(n)) << n;
  }
}

TEST(ClosedForms, MatchTraceWords) {
  for (std::int64_t n = -3; n <= 6; ++n) {
    const Certificate c = verify_thm3(n);
    EXPECT_TRUE(c.pass()) << n;
    const Word r = pretzel_r_word();
    const Poly rn = oracle::algebra_trace(Word::w(n) * r.reversed() * Word::a()) -
                    oracle::algebra_trace(r.inverse() * Word::w(n - 1) * Word::a());
    EXPECT_EQ(rn, explicit_Rn(n)) << n;
  }
  EXPECT_EQ(pretzel_r_word(), W("AWAwa"));
}

TEST(ClosedForms, SameKnotTwoPresentationsVanishTogether) {
  // m = 1 is the (-2, 3, 2n+1) knot. Sample points of {Q = R_n = 0} and check
  // the palindromic pair vanishes there too.
  const std::int64_t n = 3;
  const GeneratorSet thm = thm1_generators(pretzel_r_word(), n);
  const GeneratorSet pal = pretzel_generators(1, n);
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int found = 0;
  for (int attempt = 0; attempt < 400 && found < 10; ++attempt) {
    const auto pt = solve_pair(thm.generators[0], thm.generators[1], cd(u(rng), u(rng)), cd(u(rng), u(rng)),
                               cd(u(rng), u(rng)));
    if (!pt) continue;
    const auto [a, b, c] = *pt;
    if (std::abs(c) < 1e-3) continue;
    ++found;
    const double scale = 1 + std::abs(a) + std::abs(b) + std::abs(c);
    for (const Poly& g : pal.generators) EXPECT_LT(std::abs(g.evaluate(a, b, c)), 1e-6 * std::pow(scale, 8));
  }
  EXPECT_GE(found, 5);
}
