#pragma once

// Seeded property suites behind `fricke verify`. Each returns a certificate
// with one check per instance; the suite passes iff every check does.

#include "fricke/certificate.hpp"

#include <cstdint>
#include <string>

namespace fricke {

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  /// Random instances per property (words, relators, ...).
  std::size_t count = 0;
};

/// Defaults for a suite name: trace, charring, pretzel, variety.
/// Throws std::invalid_argument on an unknown name.
SuiteOptions default_suite_options(const std::string& suite);

/// Oracle agreement, tr1-tr4, the backward-operator lemmas, the four-word
/// identity, confluence of the two rewrite strategies, degree bound.
Certificate trace_suite(const SuiteOptions& opts);

/// Reduction identities for both families over random relators and n in
/// [n_lo, n_hi], plus the four-generator reduction and n = 0 specialisations.
Certificate charring_suite(const SuiteOptions& opts);

/// Word lemmas for (m, n) in [n_lo, n_hi]^2 and the closed forms for n in
/// [n_lo, n_hi].
Certificate pretzel_suite(const SuiteOptions& opts);

/// Elimination identities, irreducibility certificates, component counts
/// and root spot checks for n in [n_lo, n_hi].
Certificate variety_suite(const SuiteOptions& opts);

Certificate run_suite(const std::string& suite, const SuiteOptions& opts);

}  // namespace fricke
