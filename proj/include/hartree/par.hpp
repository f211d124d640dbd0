#pragma once

#include <cstddef>
#include <vector>

// Thread control and deterministic reductions.
//
// Every parallel kernel in this library has a serial reference path selected
// by Exec::Serial; results of the two paths are required to agree bitwise.
// Reductions sum fixed-size blocks in index order, so the result does not
// depend on the number of threads.

namespace hartree::par {

enum class Exec { Serial, Parallel };

// Number of worker threads. Reads HARTREE_THREADS once; absent or invalid
// means "all cores".
int thread_count();
void set_thread_count(int n);

// parallel-for over [0, n): body(i) must only write state owned by index i.
template <typename Body>
void for_each(std::size_t n, Exec exec, Body &&body);

// Deterministic sum: fixed 1024-element blocks, block sums accumulated in
// index order. Identical result for any thread count.
double det_sum(const double *x, std::size_t n, Exec exec = Exec::Parallel);
double det_sum(const std::vector<double> &x, Exec exec = Exec::Parallel);

} // namespace hartree::par

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hartree::par {

template <typename Body>
void for_each(std::size_t n, Exec exec, Body &&body) {
#ifdef _OPENMP
  if (exec == Exec::Parallel && thread_count() != 1) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long long i = 0; i < (long long)n; ++i) {
      body((std::size_t)i);
    }
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i)
    body(i);
}

} // namespace hartree::par
