#ifndef BRACEFORGE_PARALLEL_HPP
#define BRACEFORGE_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace braceforge {

/// Runs fn(0..count-1) with up to `jobs` worker threads and returns the
/// results in index order, so output does not depend on scheduling.
template <typename T>
std::vector<T> run_indexed(size_t count, const std::function<T(size_t)>& fn, int jobs) {
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = fn(i);
    }
  };
  size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), count);
  std::vector<std::thread> threads;
  for (size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace braceforge

#endif  // BRACEFORGE_PARALLEL_HPP
