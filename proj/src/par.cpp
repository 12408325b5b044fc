#include "hardy/par.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hardy::par {

namespace {
constexpr std::size_t kChunk = 1024;
}

int max_threads() {
    int n = 1;
#ifdef _OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* cap = std::getenv("HARDY_ADMIT_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1 && c < n) n = c;
    }
    return n;
}

double sum_serial(std::size_t n, const std::function<double(std::size_t)>& term) {
    // Same chunking as the parallel path so the rounding order matches exactly.
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    double total = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
        double part = 0.0;
        const std::size_t hi = std::min(n, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < hi; ++i) part += term(i);
        total += part;
    }
    return total;
}

double sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    if (chunks < 2 || max_threads() < 2) return sum_serial(n, term);
    std::vector<double> part(chunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
#endif
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        double s = 0.0;
        const std::size_t hi = std::min(n, (static_cast<std::size_t>(c) + 1) * kChunk);
        for (std::size_t i = static_cast<std::size_t>(c) * kChunk; i < hi; ++i) s += term(i);
        part[static_cast<std::size_t>(c)] = s;
    }
    double total = 0.0;
    for (double p : part) total += p;
    return total;
}

MaxLoc max_serial(std::size_t n, const std::function<double(std::size_t)>& term) {
    MaxLoc best{term(0), 0};
    for (std::size_t i = 1; i < n; ++i) {
        const double v = term(i);
        if (v > best.value) best = {v, i};
    }
    return best;
}

MaxLoc max(std::size_t n, const std::function<double(std::size_t)>& term) {
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    if (chunks < 2 || max_threads() < 2) return max_serial(n, term);
    std::vector<MaxLoc> part(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
#endif
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        MaxLoc best{term(lo), lo};
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const double v = term(i);
            if (v > best.value) best = {v, i};
        }
        part[static_cast<std::size_t>(c)] = best;
    }
    MaxLoc best = part[0];
    for (std::size_t c = 1; c < chunks; ++c)
        if (part[c].value > best.value) best = part[c];
    return best;
}

} // namespace hardy::par
