// Timing harness comparing the OpenMP kernels against their serial
// reference implementations. Results must agree; the table reports both
// timings and the speedup.

#include <chrono>
#include <cstdio>
#include <functional>

#include "minperiod/blowup.hpp"
#include "minperiod/search.hpp"
#include "minperiod/svp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void row(const char* name, const std::function<double()>& parallel,
         const std::function<double()>& serial) {
    double t0 = now();
    double rp = parallel();
    double tp = now() - t0;
    t0 = now();
    double rs = serial();
    double ts = now() - t0;
    std::printf("%-32s %10.3f ms %10.3f ms %6.2fx   |result diff| = %.3e\n", name, tp * 1e3,
                ts * 1e3, ts / tp, std::abs(rp - rs));
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-32s %13s %13s %8s\n", "kernel", "parallel", "serial", "speedup");

    {
        minperiod::PeriodMatrix tau = minperiod::random_siegel(3, 42);
        minperiod::GramForm g = minperiod::gram_from_period(tau);
        const int box = std::max(6, minperiod::certified_box(g));
        row("brute-force SVP (g=3)",
            [&] { return minperiod::brute_force_shortest(g, box).value; },
            [&] { return minperiod::brute_force_shortest_serial(g, box).value; });
        double t0 = now();
        double enum_val = minperiod::shortest_vector(g).value;
        std::printf("%-32s %10.3f ms  (enumeration, same minimum: %.12f)\n",
                    "Fincke-Pohst SVP (g=3)", (now() - t0) * 1e3, enum_val);
    }

    {
        auto p = minperiod::BlowupProfile::make(3, 0.8, 0.05);
        row("inner-region sweep (n=3, 20k)",
            [&] { return minperiod::verify_region_inner(p, 20000, 1e-8, 7).max_abs_deviation; },
            [&] {
                return minperiod::verify_region_inner_serial(p, 20000, 1e-8, 7).max_abs_deviation;
            });
        row("positivity sweep (n=3, 4k)",
            [&] { return *minperiod::verify_positivity(p, 4000, 7).min_eigenvalue; },
            [&] { return *minperiod::verify_positivity_serial(p, 4000, 7).min_eigenvalue; });
    }

    row("FS normalization (res 1024)", [] { return minperiod::fs_normalization(1024); },
        [] { return minperiod::fs_normalization_serial(1024); });

    return 0;
}
