#ifndef STANDBY_PARALLEL_HPP
#define STANDBY_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace standby {

/// Runs `body(k)` for k in [0, n) over `threads` workers and returns the
/// number of true results. Replications are independent (one RngStream per
/// k), and the integer count is order-independent, so the result is
/// identical for any thread count.
template <class Body>
std::uint64_t count_successes(std::uint64_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n < 2) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < n; ++k)
      if (body(k)) ++count;
    return count;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::uint64_t chunk = n / threads;
  const std::uint64_t rem = n % threads;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
    workers.emplace_back([&body, &partial, w, begin, end] {
      std::uint64_t count = 0;
      for (std::uint64_t k = begin; k < end; ++k)
        if (body(k)) ++count;
      partial[w] = count;
    });
    begin = end;
  }
  for (auto& t : workers) t.join();
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

/// Runs `body(k)` for k in [0, n) over `threads` workers. The body must
/// only touch state owned by index k (e.g. slot k of a preallocated
/// vector), which keeps results independent of the thread count.
template <class Body>
void for_each_index(std::uint64_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n < 2) {
    for (std::uint64_t k = 0; k < n; ++k) body(k);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::uint64_t chunk = n / threads;
  const std::uint64_t rem = n % threads;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
    workers.emplace_back([&body, begin, end] {
      for (std::uint64_t k = begin; k < end; ++k) body(k);
    });
    begin = end;
  }
  for (auto& t : workers) t.join();
}

}  // namespace standby

#endif
