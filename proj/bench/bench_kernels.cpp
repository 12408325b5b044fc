// Timed comparison of the parallel reduction kernels against their serial
// references, on the two workloads the library actually runs: dense integrand
// accumulation and log-grid sup scans. Build target only; not part of ctest.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "hardy/par.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

struct Timing {
    double serial_ms;
    double parallel_ms;
    double serial_value;
    double parallel_value;
};

Timing time_sum(std::size_t n, const std::function<double(std::size_t)>& term, int reps) {
    Timing t{};
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) t.serial_value = hardy::par::sum_serial(n, term);
    t.serial_ms = ms_since(t0) / reps;
    t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) t.parallel_value = hardy::par::sum(n, term);
    t.parallel_ms = ms_since(t0) / reps;
    return t;
}

Timing time_max(std::size_t n, const std::function<double(std::size_t)>& term, int reps) {
    Timing t{};
    auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) t.serial_value = hardy::par::max_serial(n, term).value;
    t.serial_ms = ms_since(t0) / reps;
    t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) t.parallel_value = hardy::par::max(n, term).value;
    t.parallel_ms = ms_since(t0) / reps;
    return t;
}

void report(const char* name, const Timing& t) {
    const bool same = t.serial_value == t.parallel_value; // deterministic chunking
    std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx   %s\n", name,
                t.serial_ms, t.parallel_ms,
                t.parallel_ms > 0.0 ? t.serial_ms / t.parallel_ms : 0.0,
                same ? "bit-identical" : "MISMATCH");
    if (!same)
        std::printf("    serial %.17g vs parallel %.17g\n", t.serial_value, t.parallel_value);
}

} // namespace

int main() {
    std::printf("threads: %d\n\n", hardy::par::max_threads());

    constexpr std::size_t n = 1 << 22;
    const int reps = 5;

    // quadrature-style accumulation: smooth integrand with a power endpoint
    report("sum: power integrand",
           time_sum(n, [](std::size_t i) {
               const double t = (double(i) + 0.5) / double(n);
               return std::pow(t, -0.5) * std::exp(-t);
           }, reps));

    // rearrangement moment: power times log factor
    report("sum: power-log moment",
           time_sum(n, [](std::size_t i) {
               const double t = (double(i) + 0.5) / double(n);
               return std::pow(t, 0.75) * std::pow(std::log(2.0 / t), -1.5);
           }, reps));

    // weak-norm scan: sup of t^(1/P) f*(t) on a log grid
    report("max: weak-norm scan",
           time_max(n, [](std::size_t i) {
               const double lt = -30.0 + 35.0 * double(i) / double(n);
               const double t = std::exp(lt);
               return std::cbrt(t) * std::pow(1.0 + t, -0.4) / std::cbrt(t + 1e-6);
           }, reps));

    return 0;
}
