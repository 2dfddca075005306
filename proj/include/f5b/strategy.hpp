#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/labeled.hpp"

namespace f5b {

enum class Strategy {
  Incremental,  ///< largest pair index first, then lowest lcm degree, then oldest
  MinDegree,    ///< lowest lcm degree, then oldest
};

inline std::string_view to_string(Strategy s) {
  return s == Strategy::Incremental ? "incremental" : "mindeg";
}

using SelectionKey = std::tuple<long long, std::uint64_t, std::uint64_t>;

/// Smaller key wins; the index is negated so the largest index sorts first.
template <CoefficientField K>
SelectionKey selection_key(const CriticalPair<K>& p, Strategy strategy) {
  const long long index = strategy == Strategy::Incremental ? -static_cast<long long>(p.index()) : 0;
  return {index, p.degree, p.ordinal};
}

/// Position in `pairs` of the pair the strategy picks next.
template <CoefficientField K>
std::size_t select_pair(std::span<const CriticalPair<K>> pairs, Strategy strategy) {
  if (pairs.empty()) throw EmptySet();
  std::size_t best = 0;
  auto best_key = selection_key(pairs[0], strategy);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    auto k = selection_key(pairs[i], strategy);
    if (k < best_key) {
      best = i;
      best_key = k;
    }
  }
  return best;
}

/// Heap of pending pairs; pop() returns what select_pair would pick.
template <CoefficientField K>
class PairQueue {
 public:
  explicit PairQueue(Strategy strategy) : strategy_(strategy) {}

  void push(CriticalPair<K> p) {
    auto key = selection_key(p, strategy_);
    heap_.emplace_back(key, std::move(p));
    std::push_heap(heap_.begin(), heap_.end(), later);
  }

  CriticalPair<K> pop() {
    if (heap_.empty()) throw EmptySet();
    std::pop_heap(heap_.begin(), heap_.end(), later);
    CriticalPair<K> p = std::move(heap_.back().second);
    heap_.pop_back();
    return p;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  using Entry = std::pair<SelectionKey, CriticalPair<K>>;
  static bool later(const Entry& a, const Entry& b) { return b.first < a.first; }

  Strategy strategy_;
  std::vector<Entry> heap_;
};

}  // namespace f5b
