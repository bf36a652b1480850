#pragma once

#include "fricke/word.hpp"

#include <cstdint>
#include <random>

namespace fricke {

/// A reduced word with 1..max_syllables syllables (alternating generators)
/// and nonzero exponents in [-max_exp, max_exp]. Deterministic in rng state.
inline Word random_word(std::mt19937_64& rng, std::size_t max_syllables, std::int64_t max_exp) {
  const auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const auto count = static_cast<std::size_t>(draw(1, static_cast<std::int64_t>(max_syllables)));
  Gen g = draw(0, 1) == 0 ? Gen::a : Gen::w;
  std::vector<Syllable> s;
  s.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::int64_t e = draw(1, max_exp);
    if (draw(0, 1) == 1) e = -e;
    s.push_back({g, e});
    g = other(g);
  }
  return Word(std::move(s));
}

}  // namespace fricke
