#pragma once

// OpenMP-backed index-parallel map plus a fixed-shape pairwise reduction.
// Every parallel kernel in the library writes per-index results into a
// preallocated buffer and reduces with the same tree regardless of thread
// count, so serial and parallel runs produce bit-identical output. The
// serial path is kept as the reference implementation for the tests and
// the benchmark tool.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace focklab::par {

// Global switch; the CLI maps --jobs onto it. jobs <= 1 selects the serial
// reference path.
void set_jobs(int jobs);
int jobs();

template <class F>
void parallel_for(std::ptrdiff_t n, F&& fn) {
#if defined(_OPENMP)
    if (jobs() > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs())
        for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

// Serial reference; identical semantics to parallel_for with jobs = 1.
template <class F>
void serial_for(std::ptrdiff_t n, F&& fn) {
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

// Pairwise sum with a tree fixed by element index.
template <class T>
T pairwise_sum(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
        return s;
    }
    const std::size_t h = v.size() / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

} // namespace focklab::par
