#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace invschub {

// Applies fn to every item with up to `jobs` threads.  Results keep the input order, and
// the exception of the lowest failing index is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn, int jobs)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
      try {
        slots[k].emplace(fn(items[k]));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::size_t n_threads = std::min<std::size_t>(std::max(jobs, 1), items.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace invschub
