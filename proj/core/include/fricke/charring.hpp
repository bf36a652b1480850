#pragma once

// Generator sets for the universal character ring of two-generator
// one-relator groups <a, w | lhs = rhs>, and exact verification of the
// identities that cut the general four generators down to two.

#include "fricke/certificate.hpp"
#include "fricke/poly.hpp"
#include "fricke/word.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fricke {

struct Presentation {
  Word lhs;
  Word rhs;

  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

enum class Family { four_general, thm1, thm2, thm5, thm6 };

std::string family_name(Family f);
/// Inverse of family_name; throws std::invalid_argument on unknown names.
Family parse_family(const std::string& name);

struct GeneratorSet {
  std::vector<Poly> generators;
  Family provenance = Family::four_general;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// <a, w | w^n <-r = r^-1 w^(n-1)>
Presentation thm1_presentation(const Word& r, std::int64_t n);
/// <a, w | w^n <-r = r^-1 w^(n-2)>
Presentation thm2_presentation(const Word& r, std::int64_t n);

/// [P_u - P_v, P_ua - P_va, P_uw - P_vw, P_uwa - P_vwa]
GeneratorSet four_generators(const Presentation& p);

/// [P_{<-r} - P_{r^-1 w^-1}, P_{w^n <-r a} - P_{r^-1 w^(n-1) a}]
GeneratorSet thm1_generators(const Word& r, std::int64_t n);
/// [P_{<-r} - P_{r^-1 w^-2}, P_{w^n <-r a w^-1} - P_{r^-1 w^(n-2) a w^-1}]
GeneratorSet thm2_generators(const Word& r, std::int64_t n);
/// Palindromic relator <-r w r = 1, written out directly.
GeneratorSet thm5_generators(const Word& r);
/// Palindromic relator <-r w^2 r = 1, written out directly.
GeneratorSet thm6_generators(const Word& r);

/// The fixed words the universally quantified u ranges over in the
/// reduction checks: 1, a, w, aw, wa, aW, wA.
std::vector<Word> structured_u_pool();
/// structured_u_pool() followed by `count` seeded random words of at most
/// `max_syllables` syllables.
std::vector<Word> default_u_pool(std::uint64_t seed = 7, std::size_t count = 20,
                                 std::size_t max_syllables = 6);

/// Exact checks behind the two-generator form for the w^(n-1) family.
Certificate verify_thm1_reduction(const Word& r, std::int64_t n, std::span<const Word> u_pool);
Certificate verify_thm1_reduction(const Word& r, std::int64_t n);

/// Exact checks behind the two-generator form for the w^(n-2) family.
Certificate verify_thm2_reduction(const Word& r, std::int64_t n, std::span<const Word> u_pool);
Certificate verify_thm2_reduction(const Word& r, std::int64_t n);

/// Redundancy of the fifth general generator: for c = a^e1, d = w^e2,
///   (P_ucd - P_vcd) + (P_udc - P_vdc)
///     = -P_{c d^-1}(P_u - P_v) + P_c(P_ud - P_vd) + P_d(P_uc - P_vc).
/// e1 = e2 = 1 is the combination used for the four-generator form.
Certificate verify_four_generator_reduction(const Presentation& p);

}  // namespace fricke
