#pragma once

// Fricke trace polynomials: for every word u in F(a, w) there is a unique
// P_u in Z[x, y, z] with tr(u(A, W)) = P_u(tr A, tr W, tr AW) for all
// A, W in SL2(C).

#include "fricke/poly.hpp"
#include "fricke/word.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

namespace fricke {

/// Memo table keyed by cyclic_key(u). Reads and inserts are guarded by a
/// shared mutex; concurrent inserts of one key always carry equal values, so
/// last-writer-wins is harmless.
class TraceCache {
 public:
  std::optional<Poly> find(const std::vector<Syllable>& key) const;
  void insert(const std::vector<Syllable>& key, const Poly& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<Syllable>, Poly> entries_;
};

/// Which non-unit syllable the reducer rewrites first.
enum class Strategy { leftmost, rightmost };

/// Computes P_u by rewriting with the Cayley-Hamilton trace identities.
///
/// Each step works on the cyclically reduced core and picks one syllable g^e:
///   e <= -1:  P_{B g^-1 C} = P_g P_{BC} - P_{B g C}
///   e >=  2:  P_{U g^e V}  = P_g P_{U g^(e-1) V} - P_{U g^(e-2) V}
/// Both strictly decrease (negative syllables, sum |e|, syllable count) in
/// lex order. What is left is a rotation of (aw)^n, traced with
/// c_0 = 2, c_1 = z, c_{n+1} = z c_n - c_{n-1}; a lone syllable g^k uses the
/// same recursion in P_g.
class TraceEngine {
 public:
  explicit TraceEngine(Strategy strategy = Strategy::leftmost);
  TraceEngine(Strategy strategy, std::shared_ptr<TraceCache> cache);

  Poly trace(const Word& u);

  Strategy strategy() const { return strategy_; }
  const TraceCache& cache() const { return *cache_; }
  /// Number of rewrite steps performed since construction.
  std::size_t rewrites() const { return rewrites_; }

 private:
  Poly reduce_core(const Word& core);

  Strategy strategy_;
  std::shared_ptr<TraceCache> cache_;
  std::size_t rewrites_ = 0;
};

/// P_u using a process-wide shared cache.
Poly trace_poly(const Word& u);

/// tr(g^k) as a polynomial in t = tr(g), via c_0 = 2, c_1 = t.
Poly power_trace(const Poly& t, std::int64_t k);

}  // namespace fricke
