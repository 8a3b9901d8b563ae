#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace coweight {

inline unsigned default_workers() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls body(worker, begin, end) over [0, total) in dynamically scheduled
/// chunks. The first exception thrown by any worker is rethrown here.
template <class Body>
void parallel_chunks(std::uint64_t total, unsigned workers, std::uint64_t chunk, Body&& body) {
  if (workers <= 1 || total <= chunk) {
    for (std::uint64_t b = 0; b < total; b += chunk) body(0u, b, std::min(total, b + chunk));
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::atomic<bool> failed{false};
  auto run = [&](unsigned w) {
    try {
      for (;;) {
        if (failed.load(std::memory_order_relaxed)) return;
        const auto b = next.fetch_add(chunk);
        if (b >= total) return;
        body(w, b, std::min(total, b + chunk));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace coweight
