#include "fricke/word.hpp"

#include "fricke/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace fricke {

namespace {

// Appends g^e to an already reduced syllable list, cancelling as needed.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

Word::Word(std::initializer_list<Syllable> syllables)
    : Word(std::vector<Syllable>(syllables)) {}

Word::Word(std::vector<Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const Syllable& s : syllables) push_reduced(syllables_, s);
}

Word Word::gen(Gen g, std::int64_t exp) {
  Word u;
  if (exp != 0) u.syllables_.push_back({g, exp});
  return u;
}

std::int64_t Word::weight() const {
  std::int64_t total = 0;
  for (const Syllable& s : syllables_) total += s.exp < 0 ? -s.exp : s.exp;
  return total;
}

std::size_t Word::negative_syllables() const {
  return static_cast<std::size_t>(std::count_if(
      syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.exp < 0; }));
}

Word Word::inverse() const {
  Word out;
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.syllables_.push_back({it->gen, -it->exp});
  return out;
}

Word Word::reversed() const {
  Word out;
  out.syllables_.assign(syllables_.rbegin(), syllables_.rend());
  return out;
}

Word Word::pow(std::int64_t k) const {
  if (k == 0 || is_identity()) return Word{};
  const Word base = k < 0 ? inverse() : *this;
  std::int64_t count = k < 0 ? -k : k;
  if (base.size() == 1) return gen(base[0].gen, base[0].exp * count);

  // u^k = c * core^k * c^-1, so only the core is repeated.
  const auto [core, conj] = cyclic_reduce(base);
  Word body;
  body.syllables_.reserve(core.size() * static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i)
    for (const Syllable& s : core.syllables_) push_reduced(body.syllables_, s);
  return conj * body * conj.inverse();
}

Word operator*(const Word& u, const Word& v) {
  Word out = u;
  out *= v;
  return out;
}

Word& Word::operator*=(const Word& v) {
  for (const Syllable& s : v.syllables_) push_reduced(syllables_, s);
  return *this;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const Syllable& s : syllables_) {
    if (s.exp == 1) {
      out += letter(s.gen);
    } else if (s.exp == -1) {
      out += static_cast<char>(std::toupper(letter(s.gen)));
    } else {
      out += letter(s.gen);
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& u) { return os << u.to_string(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word u = word();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      fail_unexpected();
    }
    return u;
  }

 private:
  Word word() {
    skip_space();
    if (peek() == '1') {
      ++pos_;
      return Word{};
    }
    Word u;
    bool any = false;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') break;
      u *= term();
      any = true;
    }
    if (!any) throw ParseError("expected a word", pos_);
    return u;
  }

  Word term() {
    Word base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      base = base.pow(integer());
    }
    return base;
  }

  Word atom() {
    const char c = peek();
    switch (c) {
      case 'a': ++pos_; return Word::a();
      case 'w': ++pos_; return Word::w();
      case 'A': ++pos_; return Word::a(-1);
      case 'W': ++pos_; return Word::w(-1);
      case '(': {
        const std::size_t open = pos_++;
        Word inner = word();
        skip_space();
        if (peek() != ')') throw ParseError("missing ')' for '(' opened at " + std::to_string(open), pos_);
        ++pos_;
        return inner;
      }
      default:
        fail_unexpected();
    }
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an integer exponent", pos_);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
        throw ParseError("exponent out of range", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  [[noreturn]] void fail_unexpected() const {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unknown generator '") + c + "'", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

// ---------------------------------------------------------------------------
// Cyclic structure

CyclicReduction cyclic_reduce(const Word& u) {
  std::vector<Syllable> s(u.syllables().begin(), u.syllables().end());
  std::size_t lo = 0;
  std::size_t hi = s.size();
  std::vector<Syllable> conj;

  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    const Syllable first = s[lo];
    const Syllable last = s[hi - 1];
    conj.push_back(first);
    if (first.exp + last.exp == 0) {
      ++lo;
      --hi;
      continue;
    }
    // g^p M g^q = g^p (M g^(p+q)) g^-p, and M starts and ends with the other
    // generator, so one merge finishes the job.
    ++lo;
    s[hi - 1].exp = first.exp + last.exp;
    break;
  }

  return {Word(std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                     s.begin() + static_cast<std::ptrdiff_t>(hi))),
          Word(std::move(conj))};
}

namespace {

std::vector<Syllable> least_rotation(std::span<const Syllable> s) {
  std::vector<Syllable> best(s.begin(), s.end());
  std::vector<Syllable> candidate(s.size());
  for (std::size_t shift = 1; shift < s.size(); ++shift) {
    std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shift), s.end(),
                     candidate.begin());
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace

std::vector<Syllable> cyclic_key(const Word& u) {
  const Word core = cyclic_reduce(u).core;
  std::vector<Syllable> forward = least_rotation(core.syllables());
  std::vector<Syllable> backward = least_rotation(core.inverse().syllables());
  return std::min(forward, backward);
}

bool conjugate_up_to_inversion(const Word& u, const Word& v) {
  return cyclic_key(u) == cyclic_key(v);
}

}  // namespace fricke
