#include "optlearn/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <vector>

namespace optlearn::par {

namespace {
std::atomic<int> g_threads{1};
constexpr std::size_t kGrain = 2048;  // below this a slab is not worth a task
}  // namespace

void set_threads(int n) { g_threads.store(n < 1 ? 1 : n); }

int threads() { return g_threads.load(); }

void for_range(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  const int workers = threads();
  if (workers <= 1 || n < 2 * kGrain) {
    body(0, n);
    return;
  }
  const std::size_t slabs = std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                  (n + kGrain - 1) / kGrain);
  const std::size_t chunk = (n + slabs - 1) / slabs;
  std::vector<std::future<void>> tasks;
  tasks.reserve(slabs);
  for (std::size_t s = 0; s < slabs; ++s) {
    const std::size_t begin = s * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    tasks.push_back(std::async(std::launch::async, [&body, begin, end] { body(begin, end); }));
  }
  for (auto& t : tasks) t.get();
}

namespace {
double pairwise_sum_impl(const double* xs, std::size_t n) {
  if (n <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += xs[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}
}  // namespace

double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum_impl(xs.data(), xs.size());
}

double sup_norm(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) {
    const double a = x < 0.0 ? -x : x;
    if (a > m) m = a;
  }
  return m;
}

}  // namespace optlearn::par
