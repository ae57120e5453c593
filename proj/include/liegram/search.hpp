#ifndef LIEGRAM_SEARCH_HPP
#define LIEGRAM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace liegram {

// Enumeration of {0,1}^m starting from the all-ones vector and increasing
// the number of zeroes step by step; within one zero-count the zero
// positions advance in lexicographic order.  This is the canonical witness
// search order; indices are stable across runs and thread counts.
struct zero_count_order {
  int m;

  uint64_t total() const { return m >= 64 ? ~0ull : (1ull << m); }
  // 0/1 point for a global index
  std::vector<uint32_t> point_at(uint64_t index) const;
};

struct search_result {
  std::optional<uint64_t> index; // first index satisfying the predicate
  std::vector<uint32_t> point;
  bool exhausted = false;        // the whole cube was scanned
  uint64_t examined = 0;
};

// Scans at most `budget` points (0 = the whole cube) with `threads` workers
// and returns the earliest match in the canonical order.
search_result find_first_point(int m, uint64_t budget, int threads,
                               const std::function<bool(const std::vector<uint32_t>&)>& pred);

} // namespace liegram

#endif
