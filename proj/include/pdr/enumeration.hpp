#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace pdr {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

/// The rank-th k-subset of {0, ..., n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t c = next; c < n; ++c) {
      const std::uint64_t block = binomial(n - c - 1, k - slot - 1);
      if (rank < block) {
        out.push_back(c);
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

/// Least index in [0, count) satisfying pred, or nothing. Work is split
/// into blocks across `threads` workers; every index below the reported one
/// is evaluated, so the answer does not depend on the thread count.
template <typename Pred>
std::optional<std::uint64_t> first_match(std::uint64_t count, std::size_t threads, Pred&& pred) {
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  constexpr std::uint64_t kBlock = 64;
  std::atomic<std::uint64_t> best{count};
  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&] {
    while (true) {
      const std::uint64_t start = next_block.fetch_add(kBlock);
      if (start >= count || start >= best.load()) return;
      const std::uint64_t stop = std::min(count, start + kBlock);
      for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  const std::uint64_t b = best.load();
  return b < count ? std::optional<std::uint64_t>(b) : std::nullopt;
}

}  // namespace pdr
