#include "hartree/par.hpp"

#include <cstdlib>
#include <thread>

namespace hartree::par {

namespace {
int g_threads = 0; // 0 = uninitialized

int detect() {
  if (const char *env = std::getenv("HARTREE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1)
      return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? (int)hc : 1;
}
} // namespace

int thread_count() {
  if (g_threads == 0)
    g_threads = detect();
  return g_threads;
}

void set_thread_count(int n) { g_threads = n >= 1 ? n : 0; }

double det_sum(const double *x, std::size_t n, Exec exec) {
  constexpr std::size_t block = 1024;
  const std::size_t nb = (n + block - 1) / block;
  if (nb <= 1) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      s += x[i];
    return s;
  }
  std::vector<double> partial(nb);
  for_each(nb, exec, [&](std::size_t b) {
    const std::size_t lo = b * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i)
      s += x[i];
    partial[b] = s;
  });
  double s = 0.0;
  for (double p : partial)
    s += p;
  return s;
}

double det_sum(const std::vector<double> &x, Exec exec) {
  return det_sum(x.data(), x.size(), exec);
}

} // namespace hartree::par
