#pragma once

// Words in the free group F(a, w).
//
// A Word is stored as a list of syllables g^e. Every constructor reduces
// freely, so two Words are equal as group elements iff they compare equal.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fricke {

enum class Gen : std::uint8_t { a = 0, w = 1 };

constexpr Gen other(Gen g) { return g == Gen::a ? Gen::w : Gen::a; }
constexpr char letter(Gen g) { return g == Gen::a ? 'a' : 'w'; }

struct Syllable {
  Gen gen;
  std::int64_t exp;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Syllable> syllables);
  explicit Word(std::vector<Syllable> syllables);

  static Word gen(Gen g, std::int64_t exp = 1);
  static Word a(std::int64_t exp = 1) { return gen(Gen::a, exp); }
  static Word w(std::int64_t exp = 1) { return gen(Gen::w, exp); }

  std::span<const Syllable> syllables() const { return syllables_; }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }
  std::size_t size() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  /// Sum of |exponent| over syllables, i.e. the length as a letter string.
  std::int64_t weight() const;
  std::size_t negative_syllables() const;

  Word inverse() const;
  /// The same letters written in reversed order.
  Word reversed() const;
  Word pow(std::int64_t k) const;
  bool is_palindrome() const { return reversed() == *this; }

  std::string to_string() const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& u, const Word& v) {
    return u.syllables_ <=> v.syllables_;
  }

 private:
  std::vector<Syllable> syllables_;
};

std::ostream& operator<<(std::ostream& os, const Word& u);

/// Parses the word grammar:
///   word := "1" | term+ ;  term := atom ("^" int)? ;
///   atom := "a" | "w" | "A" | "W" | "(" word ")" ;  int := "-"? digit+
/// Throws ParseError on malformed input.
Word parse_word(std::string_view text);

/// u == conjugator * core * conjugator^-1 where the first and last syllables
/// of core belong to different generators (or core has at most one syllable).
struct CyclicReduction {
  Word core;
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& u);

/// Lexicographically least syllable rotation of the cyclic core of u or of
/// u^-1. Two words share a key iff they are conjugate up to inversion.
std::vector<Syllable> cyclic_key(const Word& u);

bool conjugate_up_to_inversion(const Word& u, const Word& v);

}  // namespace fricke
