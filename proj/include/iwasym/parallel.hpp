#ifndef IWASYM_PARALLEL_HPP
#define IWASYM_PARALLEL_HPP

// OpenMP shim: every kernel in the library has a serial reference twin used
// by the tests, and the parallel one must be bit-identical (all arithmetic
// here is exact, so reduction order never matters).

#if defined(_OPENMP)
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline int omp_get_num_threads() { return 1; }
#endif

#include <cstddef>
#include <functional>
#include <vector>

namespace iwasym {

// Chunked index-range dispatch. `fn(begin, end)` runs on disjoint ranges.
inline void parallel_ranges(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
#if defined(_OPENMP)
    int nt = omp_get_max_threads();
    std::size_t chunk = (n + nt - 1) / (nt ? nt : 1);
    if (chunk == 0) chunk = n;
#pragma omp parallel for schedule(static)
    for (int t = 0; t < nt; ++t) {
        std::size_t b = static_cast<std::size_t>(t) * chunk;
        std::size_t e = b + chunk < n ? b + chunk : n;
        if (b < e) fn(b, e);
    }
#else
    if (n) fn(0, n);
#endif
}

} // namespace iwasym

#endif
