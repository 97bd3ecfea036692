#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace minksurf {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Block-partitioned parallel loop over [0, n). Results must be written by
/// index; the partition is deterministic, so output does not depend on the
/// worker count. The first exception thrown by any worker is rethrown.
inline void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::min(resolve_jobs(jobs), n);
  if (n <= 0) return;
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int t = 0; t < jobs; ++t) {
    const int begin = static_cast<int>(static_cast<long long>(n) * t / jobs);
    const int end = static_cast<int>(static_cast<long long>(n) * (t + 1) / jobs);
    workers.emplace_back([&, begin, end] {
      try {
        for (int i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace minksurf
