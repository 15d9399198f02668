#pragma once

#include "minperiod/gram.hpp"

namespace minperiod {

// Unimodular change of basis U (columns are the reduced basis vectors in
// original coordinates) together with the reduced Gram U^T G U.
struct ReducedBasis {
    IntMatrix basis;
    Eigen::MatrixXd gram_reduced;
};

// LLL reduction working directly on the Gram matrix (delta in (1/4, 1),
// default 0.99). Throws NumericalBreakdown when the Gram-Schmidt data
// loses positivity or the sweep fails to terminate, which signals an
// (effectively) singular input.
ReducedBasis lll_reduce(const GramForm& g, double delta = 0.99);

namespace detail {
// Raw-matrix entry point without the SPD pre-check; lets tests drive the
// breakdown path directly.
ReducedBasis lll_reduce_raw(const Eigen::MatrixXd& gram, double delta);
} // namespace detail

// Exact integer determinant (Bareiss, __int128 intermediates).
std::int64_t int_determinant(const IntMatrix& m);

} // namespace minperiod
