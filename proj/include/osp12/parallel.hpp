#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace osp12 {

/// Worker count: explicit value if > 0, else the OSP12_WORKERS environment
/// variable, else 1.
inline unsigned resolve_workers(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("OSP12_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Applies f(i) for i in [0, n) across up to `workers` threads, collecting
/// results indexed by i. Results are merged in input order, so output is
/// independent of the worker count.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned workers, F f) {
  std::vector<T> out(n);
  if (n == 0) return out;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  const unsigned w = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) out[i] = f(i);
    });
  }
  for (auto& th : threads) th.join();
  return out;
}

}  // namespace osp12
