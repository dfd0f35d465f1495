#ifndef HOPFIND_PARALLEL_HPP
#define HOPFIND_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hopfind {

/// Thread cap from HOPFIND_THREADS (positive integer), else the hardware
/// concurrency. Throws InputError on a malformed value.
std::size_t threadBudget();

/// Runs body(i) for i in [0, n); each index must only touch its own output.
template <class Body>
void parallelFor(std::size_t n, Body&& body) {
  const std::size_t threads = std::min(threadBudget(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Smallest index i in [0, n) for which probe(i) yields a witness.
/// The result does not depend on the number of threads.
template <class Probe>
std::optional<std::pair<std::size_t, std::string>> firstWitness(std::size_t n, Probe&& probe) {
  const std::size_t threads = std::min(threadBudget(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto w = probe(i)) return std::make_pair(i, std::move(*w));
    }
    return std::nullopt;
  }
  std::vector<std::optional<std::pair<std::size_t, std::string>>> found(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          if (auto w = probe(i)) {
            found[t] = std::make_pair(i, std::move(*w));
            return;
          }
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace hopfind

#endif  // HOPFIND_PARALLEL_HPP
