#include "liegram/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>

namespace liegram {

namespace {

uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// lex-rank unranking of a k-subset of {0..m-1}
std::vector<int> unrank_combination(int m, int k, uint64_t rank) {
  std::vector<int> pos;
  int cur = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int v = cur;; ++v) {
      uint64_t block = choose(m - v - 1, k - slot - 1);
      if (rank < block) { pos.push_back(v); cur = v + 1; break; }
      rank -= block;
    }
  }
  return pos;
}

// advance zero positions in lex order; false when done at this zero-count
bool next_combination(std::vector<int>& pos, int m) {
  int k = static_cast<int>(pos.size());
  for (int i = k - 1; i >= 0; --i) {
    if (pos[i] < m - (k - i)) {
      ++pos[i];
      for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<uint32_t> point_from_zeros(int m, const std::vector<int>& zeros) {
  std::vector<uint32_t> x(m, 1);
  for (int z : zeros) x[z] = 0;
  return x;
}

} // namespace

std::vector<uint32_t> zero_count_order::point_at(uint64_t index) const {
  for (int z = 0; z <= m; ++z) {
    uint64_t c = choose(m, z);
    if (index < c) return point_from_zeros(m, unrank_combination(m, z, index));
    index -= c;
  }
  assert(false);
  return {};
}

search_result find_first_point(int m, uint64_t budget, int threads,
                               const std::function<bool(const std::vector<uint32_t>&)>& pred) {
  zero_count_order ord{m};
  const uint64_t total = ord.total();
  const uint64_t limit = budget == 0 ? total : std::min(budget, total);

  search_result res;
  res.exhausted = limit == total;

  if (threads <= 1) {
    uint64_t index = 0;
    for (int z = 0; z <= m && index < limit; ++z) {
      std::vector<int> zeros(z);
      for (int i = 0; i < z; ++i) zeros[i] = i;
      bool more = true;
      while (more && index < limit) {
        auto x = point_from_zeros(m, zeros);
        ++res.examined;
        if (pred(x)) {
          res.index = index;
          res.point = std::move(x);
          res.exhausted = false;
          return res;
        }
        ++index;
        more = next_combination(zeros, m);
      }
    }
    return res;
  }

  // parallel: fixed-size chunks claimed in order; the earliest hit wins
  const uint64_t chunk = 1024;
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> best{~0ull};
  std::mutex mtx;
  std::vector<uint32_t> best_point;
  std::atomic<uint64_t> examined{0};

  auto worker = [&] {
    for (;;) {
      uint64_t start = next.fetch_add(chunk);
      if (start >= limit || start >= best.load()) return;
      uint64_t stop = std::min(start + chunk, limit);
      for (uint64_t i = start; i < stop && i < best.load(); ++i) {
        auto x = ord.point_at(i);
        examined.fetch_add(1);
        if (pred(x)) {
          std::lock_guard<std::mutex> lk(mtx);
          if (i < best.load()) {
            best.store(i);
            best_point = std::move(x);
          }
          return;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  res.examined = examined.load();
  if (best.load() != ~0ull) {
    res.index = best.load();
    res.point = best_point;
    res.exhausted = false;
  }
  return res;
}

} // namespace liegram
