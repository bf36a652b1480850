#include "fricke/trace.hpp"

#include <mutex>

namespace fricke {

std::optional<Poly> TraceCache::find(const std::vector<Syllable>& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TraceCache::insert(const std::vector<Syllable>& key, const Poly& value) {
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(key, value);
}

std::size_t TraceCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void TraceCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

// ---------------------------------------------------------------------------

Poly power_trace(const Poly& t, std::int64_t k) {
  if (k < 0) k = -k;
  Poly prev(2);
  if (k == 0) return prev;
  Poly cur = t;
  for (std::int64_t i = 1; i < k; ++i) {
    Poly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

const Poly& generator_trace(Gen g) {
  static const Poly x = Poly::x();
  static const Poly y = Poly::y();
  return g == Gen::a ? x : y;
}

Word with_exponent(std::span<const Syllable> syllables, std::size_t index, std::int64_t exp) {
  std::vector<Syllable> s(syllables.begin(), syllables.end());
  s[index].exp = exp;
  return Word(std::move(s));
}

}  // namespace

TraceEngine::TraceEngine(Strategy strategy)
    : TraceEngine(strategy, std::make_shared<TraceCache>()) {}

TraceEngine::TraceEngine(Strategy strategy, std::shared_ptr<TraceCache> cache)
    : strategy_(strategy), cache_(std::move(cache)) {}

Poly TraceEngine::trace(const Word& u) { return reduce_core(cyclic_reduce(u).core); }

Poly TraceEngine::reduce_core(const Word& core) {
  if (core.is_identity()) return Poly(2);
  if (core.size() == 1) return power_trace(generator_trace(core[0].gen), core[0].exp);

  const std::vector<Syllable> key = cyclic_key(core);
  if (auto hit = cache_->find(key)) return *std::move(hit);

  const auto syllables = core.syllables();
  const std::size_t count = syllables.size();
  std::optional<std::size_t> target;
  for (std::size_t step = 0; step < count; ++step) {
    const std::size_t i = strategy_ == Strategy::leftmost ? step : count - 1 - step;
    if (syllables[i].exp != 1) {
      target = i;
      break;
    }
  }

  Poly result;
  if (!target) {
    // Alternating, cyclically reduced, all exponents 1: a rotation of (aw)^n.
    result = power_trace(Poly::z(), static_cast<std::int64_t>(count / 2));
  } else {
    const Syllable s = syllables[*target];
    // Negative syllables step towards zero from below, others from above.
    const std::int64_t step = s.exp < 0 ? 1 : -1;
    const Word near = with_exponent(syllables, *target, s.exp + step);
    const Word far = with_exponent(syllables, *target, s.exp + 2 * step);
    ++rewrites_;
    result = generator_trace(s.gen) * reduce_core(cyclic_reduce(near).core) -
             reduce_core(cyclic_reduce(far).core);
  }
  cache_->insert(key, result);
  return result;
}

Poly trace_poly(const Word& u) {
  static const auto shared = std::make_shared<TraceCache>();
  TraceEngine engine(Strategy::leftmost, shared);
  return engine.trace(u);
}

}  // namespace fricke
