#pragma once

#include <string>

#include "minperiod/lll.hpp"

namespace minperiod {

inline constexpr int kEnumDimCap = 20; // 2g <= 20: exact enumeration only

// A certified global minimizer of Q over Z^{2g} \ {0}.
// Tie-break among minimizers: lexicographically smallest vector whose
// first nonzero coordinate is positive.
struct ShortestResult {
    LatticeVector vector;
    double value = 0.0;
    std::string method;      // "enumeration" | "brute-force"
    long num_minimizers = 0; // vectors (counting both signs) within rel 1e-12 of the minimum
};

// Exact SVP: LLL preconditioning followed by Fincke-Pohst enumeration.
// Throws DimensionTooLarge when dim > enum_dim_cap. When the Gram form
// carries exact rational data the candidate values are re-evaluated
// exactly before the winner is chosen.
ShortestResult shortest_vector(const GramForm& g, int enum_dim_cap = kEnumDimCap);

// Smallest box radius guaranteed to contain a global minimizer,
// ceil(sqrt(q1 / lambda_min(G))) for the upper bound q1 given by the
// better of the LLL first vector and the smallest diagonal entry.
int certified_box(const GramForm& g);

// Exhaustive scan over nonzero vectors with coordinates in [-box, box]
// (testing oracle; OpenMP over leading-coordinate slabs). Throws
// BoxTooSmall when box < certified_box(g).
ShortestResult brute_force_shortest(const GramForm& g, int box);

// Identical semantics and (bit-identical) results, single-threaded.
ShortestResult brute_force_shortest_serial(const GramForm& g, int box);

// m(A): minimum of the polarization form over nonzero periods.
double min_period_length(const PeriodMatrix& tau);

} // namespace minperiod
