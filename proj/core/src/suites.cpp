#include "fricke/suites.hpp"

#include "fricke/charring.hpp"
#include "fricke/errors.hpp"
#include "fricke/pretzel.hpp"
#include "fricke/random_words.hpp"
#include "fricke/sl2_oracle.hpp"
#include "fricke/trace.hpp"
#include "fricke/variety.hpp"

#include <random>
#include <stdexcept>

namespace fricke {

SuiteOptions default_suite_options(const std::string& suite) {
  if (suite == "trace") return {7, 0, 0, 100};
  if (suite == "charring") return {7, -3, 5, 5};
  if (suite == "pretzel") return {7, -2, 3, 0};
  if (suite == "variety") return {7, -5, 8, 0};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Certificate trace_suite(const SuiteOptions& opts) {
  Certificate cert("trace suite seed=" + std::to_string(opts.seed));
  std::mt19937_64 rng(opts.seed);
  TraceEngine left(Strategy::leftmost);
  TraceEngine right(Strategy::rightmost);
  const Poly x = Poly::x();

  for (std::size_t i = 0; i < opts.count; ++i) {
    const Word u = random_word(rng, 10, 3);
    const Word v = random_word(rng, 6, 3);
    const Word c = random_word(rng, 3, 2);
    const Word d = random_word(rng, 3, 2);
    const std::string tag = "[" + std::to_string(i) + "]";

    cert.add("oracle" + tag, oracle_check(u, 20, opts.seed + i), u.to_string());
    const Poly pu = trace_poly(u);
    cert.add_identity("tr1" + tag, pu, trace_poly(u.inverse()));
    cert.add_identity("tr2" + tag, trace_poly(u * v), trace_poly(v * u));
    cert.add_identity("tr3" + tag, trace_poly(v * u) + trace_poly(v * u.inverse()), pu * trace_poly(v));
    cert.add_identity("tr4" + tag, trace_poly(v * Word::a() * u) + trace_poly(v * Word::a(-1) * u),
                      x * trace_poly(v * u));
    cert.add_identity("backward" + tag, trace_poly(u * v), trace_poly(u.reversed() * v.reversed()));
    cert.add_identity("four-word" + tag, trace_poly(u * c * d) + trace_poly(u * d * c),
                      -trace_poly(c * d.inverse()) * pu + trace_poly(c) * trace_poly(u * d) +
                          trace_poly(d) * trace_poly(u * c));
    cert.add_identity("confluence" + tag, left.trace(u), right.trace(u));
    cert.add("degree" + tag, pu.total_degree() <= u.weight());
  }
  return cert;
}

Certificate charring_suite(const SuiteOptions& opts) {
  Certificate cert("charring suite seed=" + std::to_string(opts.seed));
  std::mt19937_64 rng(opts.seed);
  const auto pool = default_u_pool(opts.seed);
  std::vector<Word> relators = {Word{}, pretzel_r_word()};
  for (std::size_t i = 0; i < opts.count; ++i) relators.push_back(random_word(rng, 8, 2));

  for (const Word& r : relators) {
    const std::string rtag = "r=" + r.to_string();
    for (std::int64_t n = opts.n_lo; n <= opts.n_hi; ++n) {
      const std::string tag = "[" + rtag + ",n=" + std::to_string(n) + "]";
      const Certificate c1 = verify_thm1_reduction(r, n, pool);
      const Certificate c2 = verify_thm2_reduction(r, n, pool);
      cert.add("shift-one-reduction" + tag, c1.pass(), std::to_string(c1.failures()) + " failures");
      cert.add("shift-two-reduction" + tag, c2.pass(), std::to_string(c2.failures()) + " failures");
      const Certificate c4 = verify_four_generator_reduction(thm1_presentation(r, n));
      cert.add("four-generator" + tag, c4.pass());
    }
    cert.add("palindromic-w[" + rtag + "]", thm1_generators(r, 0).generators == thm5_generators(r).generators);
    cert.add("palindromic-w2[" + rtag + "]", thm2_generators(r, 0).generators == thm6_generators(r).generators);
  }
  return cert;
}

Certificate pretzel_suite(const SuiteOptions& opts) {
  Certificate cert("pretzel suite");
  for (std::int64_t m = opts.n_lo; m <= opts.n_hi; ++m) {
    cert.add("u-word[m=" + std::to_string(m) + "]", verify_lemma31(m));
    for (std::int64_t n = opts.n_lo; n <= opts.n_hi; ++n) {
      const std::string tag = "[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
      cert.add("relator" + tag, verify_prop32(m, n));
    }
  }
  for (std::int64_t n = opts.n_lo; n <= opts.n_hi; ++n) {
    const Certificate c = verify_thm3(n);
    cert.add("closed-forms[n=" + std::to_string(n) + "]", c.pass());
  }
  return cert;
}

Certificate variety_suite(const SuiteOptions& opts) {
  Certificate cert("variety suite");
  for (std::int64_t n = opts.n_lo; n <= opts.n_hi; ++n) {
    const std::string tag = "[n=" + std::to_string(n) + "]";
    const Certificate ids = identity_suite(n);
    cert.add("identities" + tag, ids.pass(), std::to_string(ids.failures()) + " failures");
    if (n == 0 || n == 1 || n == 2) {
      bool refused = false;
      try {
        (void)component_count(n);
      } catch (const TorusKnotError&) {
        refused = true;
      }
      cert.add("torus-refused" + tag, refused);
      continue;
    }
    const Certificate irr = irreducibility_certificate(n);
    cert.add("irreducible" + tag, irr.pass());
    if (irr.pass()) {
      const int expected = (2 * n + 1) % 3 == 0 ? 3 : 2;
      const int got = component_count(n);
      cert.add("component-count" + tag, got == expected, std::to_string(got));
    }
    if (n >= 4) cert.add("roots" + tag, numeric_spotchecks(n, 1e-9).pass());
  }
  return cert;
}

Certificate run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "trace") return trace_suite(opts);
  if (suite == "charring") return charring_suite(opts);
  if (suite == "pretzel") return pretzel_suite(opts);
  if (suite == "variety") return variety_suite(opts);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace fricke
