#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace braceblock::detail {

/// Runs scan(i) for i in [0, n) and returns the result for the lowest i that
/// produced one. Rows are split into contiguous chunks across threads; each
/// worker stops at its first hit, so the overall answer does not depend on
/// the thread count.
template <typename Result, typename Scan>
std::optional<Result> first_hit(std::size_t n, int threads, Scan scan) {
  const std::size_t workers =
      std::clamp<std::size_t>(threads > 0 ? static_cast<std::size_t>(threads) : 1, 1,
                              std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto r = scan(i)) return r;
    }
    return std::nullopt;
  }
  std::vector<std::optional<Result>> hits(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          if (auto r = scan(i)) {
            hits[w] = std::move(r);
            return;
          }
        }
      });
    }
  }
  for (auto& h : hits) {
    if (h) return h;
  }
  return std::nullopt;
}

}  // namespace braceblock::detail
