#ifndef UALG_PARALLEL_HPP_
#define UALG_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ualg::detail {

// Runs fn(i) for i in [0, count) on at most `threads` workers using static
// contiguous slices.  Callers write results into preallocated per-index
// slots, so the outcome does not depend on the worker count.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads < 1) {
    threads = 1;
  }
  std::size_t workers = static_cast<std::size_t>(threads);
  if (workers > count) {
    workers = count;
  }
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = count * w / workers;
    std::size_t hi = count * (w + 1) / workers;
    pool.emplace_back([&fn, &errors, w, lo, hi]() {
      try {
        for (std::size_t i = lo; i < hi; ++i) {
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace ualg::detail

#endif  // UALG_PARALLEL_HPP_
