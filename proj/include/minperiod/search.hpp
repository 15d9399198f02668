#pragma once

#include <cstdint>

#include "minperiod/period_matrix.hpp"

namespace minperiod {

struct SearchResult {
    int g = 0;
    long iterations = 0;
    PeriodMatrix best_tau;
    double best_m = 0.0;
    double bs1_reference = 0.0;
    double ratio = 0.0; // best_m / bs1_reference
    std::uint64_t seed = 0;
};

// Random Siegel point: X symmetric with entries uniform in [-1/2, 1/2],
// Y = L L^T + 0.1 I with L lower-triangular, entries uniform in
// [-spread, spread]. Always validates.
PeriodMatrix random_siegel(int g, std::uint64_t seed, double spread = 1.0);

// Maximizes m(A) by seeded sampling plus a shrinking-step hill climb
// around the incumbent. The perturbation schedule depends only on the
// absolute iteration index, so for a fixed seed the candidate stream of a
// longer run extends that of a shorter one (best_m is monotone in
// iterations). Every evaluated sample is checked against the consistency
// bound m <= (4/pi)(g!)^{1/g}; a violation aborts the run, since it can
// only mean a bug.
SearchResult search_max_min_period(int g, long iterations, std::uint64_t seed,
                                   double spread = 1.0);

} // namespace minperiod
