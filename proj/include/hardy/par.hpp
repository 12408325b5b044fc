#pragma once

#include <cstddef>
#include <functional>

namespace hardy::par {

// Effective thread count: min(omp_get_max_threads, HARDY_ADMIT_THREADS if set).
int max_threads();

// Deterministic parallel reduction: terms are accumulated in fixed-size chunks
// and the chunk partials are combined in index order, so the result is
// bit-identical for any thread count (and to the serial reference).
double sum(std::size_t n, const std::function<double(std::size_t)>& term);
double sum_serial(std::size_t n, const std::function<double(std::size_t)>& term);

struct MaxLoc {
    double value;
    std::size_t index;
};

// Parallel argmax; ties resolve to the smallest index, as in the serial scan.
MaxLoc max(std::size_t n, const std::function<double(std::size_t)>& term);
MaxLoc max_serial(std::size_t n, const std::function<double(std::size_t)>& term);

} // namespace hardy::par
