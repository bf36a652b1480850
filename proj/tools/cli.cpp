#include "cli.hpp"

#include "fricke/charring.hpp"
#include "fricke/errors.hpp"
#include "fricke/pretzel.hpp"
#include "fricke/serialize.hpp"
#include "fricke/suites.hpp"
#include "fricke/trace.hpp"
#include "fricke/variety.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <regex>

namespace fricke::cli {

namespace {

using nlohmann::json;

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

Range parse_range(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw CLI::ValidationError("--n-range", "expected a..b, got '" + text + "'");
  Range r{std::stoll(m[1].str()), std::stoll(m[2].str())};
  if (r.lo > r.hi) throw CLI::ValidationError("--n-range", "empty range '" + text + "'");
  return r;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_certificate_text(std::ostream& out, const Certificate& cert, bool all_checks) {
  std::size_t passed = 0;
  for (const Check& c : cert.checks()) {
    if (c.pass) ++passed;
    if (all_checks || !c.pass) {
      out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (c.witness) out << "  (" << *c.witness << ")";
      out << '\n';
    }
  }
  out << cert.subject() << ": " << passed << "/" << cert.checks().size() << " checks passed\n";
}

struct Options {
  std::string format = "text";

  std::string trace_word;

  std::optional<std::string> ring_u, ring_v, ring_family, ring_r;
  std::int64_t ring_n = 0;

  std::int64_t pretzel_m = 1;
  std::int64_t pretzel_n = 1;

  std::int64_t variety_n = 3;

  std::string suite;
  std::optional<std::string> n_range;
  std::uint64_t seed = 7;
  std::optional<std::size_t> count;
};

int cmd_trace(const Options& o, std::ostream& out) {
  const Word u = parse_word(o.trace_word);
  const Poly p = trace_poly(u);
  if (o.format == "json") {
    print_json(out, p);
  } else {
    out << p << '\n';
  }
  return kSuccess;
}

int cmd_ring(const Options& o, std::ostream& out) {
  GeneratorSet gens;
  Presentation pres;
  if (o.ring_family) {
    if (!o.ring_r) throw CLI::ValidationError("ring", "--family needs --r");
    const Word r = parse_word(*o.ring_r);
    if (*o.ring_family == "thm1") {
      gens = thm1_generators(r, o.ring_n);
      pres = thm1_presentation(r, o.ring_n);
    } else if (*o.ring_family == "thm2") {
      gens = thm2_generators(r, o.ring_n);
      pres = thm2_presentation(r, o.ring_n);
    } else {
      throw CLI::ValidationError("--family", "expected thm1 or thm2");
    }
  } else {
    if (!o.ring_u || !o.ring_v) throw CLI::ValidationError("ring", "give --u and --v, or --family with --r and --n");
    pres = {parse_word(*o.ring_u), parse_word(*o.ring_v)};
    gens = four_generators(pres);
  }

  if (o.format == "json") {
    json j = gens;
    j["presentation"] = pres.to_string();
    print_json(out, j);
  } else {
    out << "presentation: <a,w | " << pres.to_string() << ">\n";
    for (std::size_t i = 0; i < gens.generators.size(); ++i)
      out << "g" << i + 1 << " = " << gens.generators[i] << '\n';
  }
  return kSuccess;
}

int cmd_pretzel(const Options& o, std::ostream& out) {
  const PretzelWords pw = pretzel_words(o.pretzel_m, o.pretzel_n);
  const GeneratorSet gens = pretzel_generators(o.pretzel_m, o.pretzel_n);
  const bool words_ok = verify_lemma31(o.pretzel_m) && verify_prop32(o.pretzel_m, o.pretzel_n);
  if (o.format == "json") {
    json j = pw;
    j["relator"] = pw.relator().to_string();
    j["generators"] = gens;
    j["word_lemmas_pass"] = words_ok;
    print_json(out, j);
  } else {
    out << "(-2," << 2 * o.pretzel_m + 1 << "," << 2 * o.pretzel_n + 1 << ")-pretzel knot\n";
    out << "u = " << pw.u << "\ns = " << pw.s << "\nr = " << pw.r << '\n';
    out << "relator = " << pw.relator() << '\n';
    out << "g1 = " << gens.generators[0] << '\n';
    out << "g2 = " << gens.generators[1] << '\n';
    out << "word lemmas: " << (words_ok ? "pass" : "FAIL") << '\n';
  }
  return words_ok ? kSuccess : kVerificationFailed;
}

int cmd_variety(const Options& o, std::ostream& out) {
  const std::int64_t n = o.variety_n;
  const VarietyData d = build_variety_data(n);
  const Certificate ids = identity_suite(n);
  // Throws TorusKnotError for n in {0, 1, 2}.
  const ComponentReport report = component_report(n);

  if (o.format == "json") {
    json j = report;
    j["Q"] = d.Q;
    j["R_n"] = d.Rn;
    j["T"] = d.T;
    j["t0"] = d.t0.to_string();
    j["t2"] = d.t2.to_string();
    j["identity_suite"] = ids;
    print_json(out, j);
  } else {
    out << "(-2,3," << 2 * n + 1 << ")-pretzel knot, n = " << n << '\n';
    out << "Q   = " << d.Q << '\n';
    out << "R_n = " << d.Rn << '\n';
    out << "T   = " << d.T << '\n';
    out << "t0  = " << d.t0 << '\n';
    out << "t2  = " << d.t2 << '\n';
    print_certificate_text(out, ids, false);
    print_certificate_text(out, report.certificate, true);
    out << "component_count = " << report.count << '\n';
    for (const std::string& c : report.components) out << "  " << c << '\n';
  }
  return ids.pass() && report.certificate.pass() ? kSuccess : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions opts = default_suite_options(o.suite);
  opts.seed = o.seed;
  if (o.n_range) {
    const Range r = parse_range(*o.n_range);
    opts.n_lo = r.lo;
    opts.n_hi = r.hi;
  }
  if (o.count) opts.count = *o.count;
  const Certificate cert = run_suite(o.suite, opts);
  if (o.format == "json") {
    print_json(out, cert);
  } else {
    print_certificate_text(out, cert, false);
  }
  return cert.pass() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SL2 trace polynomials and character ring generators"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  add_format(&app);

  CLI::App* trace = app.add_subcommand("trace", "Trace polynomial P_u of a word");
  trace->add_option("word", o.trace_word, "Word in a, w, A, W")->required();

  CLI::App* ring = app.add_subcommand("ring", "Character ring generators of a one-relator group");
  ring->add_option("--u", o.ring_u, "Left side of the relation u = v");
  ring->add_option("--v", o.ring_v, "Right side of the relation u = v");
  ring->add_option("--family", o.ring_family, "thm1: w^n <-r = r^-1 w^(n-1); thm2: w^n <-r = r^-1 w^(n-2)")
      ->check(CLI::IsMember({"thm1", "thm2"}));
  ring->add_option("--r", o.ring_r, "Word r of the family");
  ring->add_option("--n", o.ring_n, "Family parameter n");

  CLI::App* pretzel = app.add_subcommand("pretzel", "(-2,2m+1,2n+1)-pretzel knot group");
  pretzel->add_option("--m", o.pretzel_m)->required();
  pretzel->add_option("--n", o.pretzel_n)->required();

  CLI::App* variety = app.add_subcommand("variety", "Components of the (-2,3,2n+1)-pretzel character variety");
  variety->add_option("--n", o.variety_n)->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a seeded property suite");
  verify->add_option("--suite", o.suite)->required()->check(
      CLI::IsMember({"trace", "charring", "pretzel", "variety"}));
  verify->add_option("--n-range", o.n_range, "Parameter range a..b");
  verify->add_option("--seed", o.seed, "Random seed (default 7)");
  verify->add_option("--count", o.count, "Random instances per property");

  for (CLI::App* cmd : {trace, ring, pretzel, variety, verify}) add_format(cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (trace->parsed()) return cmd_trace(o, out);
    if (ring->parsed()) return cmd_ring(o, out);
    if (pretzel->parsed()) return cmd_pretzel(o, out);
    if (variety->parsed()) return cmd_variety(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: bad word: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace fricke::cli
