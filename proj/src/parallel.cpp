#include "focklab/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace focklab::par {

namespace {
std::atomic<int> g_jobs{
#if defined(_OPENMP)
    0 // resolved lazily from omp_get_max_threads
#else
    1
#endif
};
}

void set_jobs(int jobs) { g_jobs.store(std::max(1, jobs)); }

int jobs() {
    int j = g_jobs.load();
    if (j == 0) {
#if defined(_OPENMP)
        j = std::max(1, omp_get_max_threads());
#else
        j = 1;
#endif
        g_jobs.store(j);
    }
    return j;
}

} // namespace focklab::par
