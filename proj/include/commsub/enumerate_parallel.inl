#pragma once

#include <atomic>
#include <cstdint>

namespace commsub {

template <class Pred>
std::optional<std::uint64_t> first_match_parallel(const SubspaceEnumeration& en, const Pred& pred,
                                                  std::uint64_t chunk) {
  const std::uint64_t total = en.size();
  if (chunk == 0) chunk = 1;
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::atomic<std::uint64_t> best{total};

#pragma omp parallel
  {
    Pred local = pred;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
      if (begin >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (auto cur = en.cursor(begin); cur.index() < end; cur.next()) {
        if (cur.index() >= best.load(std::memory_order_relaxed)) break;
        if (local(cur.basis())) {
          std::uint64_t seen = best.load(std::memory_order_relaxed);
          while (cur.index() < seen && !best.compare_exchange_weak(seen, cur.index())) {
          }
          break;
        }
      }
    }
  }

  const std::uint64_t hit = best.load();
  if (hit == total) return std::nullopt;
  return hit;
}

} // namespace commsub
