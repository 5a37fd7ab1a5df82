#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coxgrowth {

/// Worker count: hardware concurrency clamped to [1, cap].
inline unsigned worker_count(unsigned cap = 8) {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw == 0 ? 1u : hw, 1u, cap);
}

/// out[i] = f(in[i]) on a bounded pool; results keep input order. The first
/// exception thrown by any task is rethrown after all workers join.
template <class In, class F>
auto parallel_map(const std::vector<In>& in, F f, unsigned workers = worker_count())
    -> std::vector<decltype(f(in.front()))> {
  using Out = decltype(f(in.front()));
  std::vector<Out> out(in.size());
  if (in.empty()) return out;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(in.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < in.size(); i = next++) {
      try {
        out[i] = f(in[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace coxgrowth
