#pragma once

#include <Eigen/Dense>
#include <optional>

#include "minperiod/error.hpp"
#include "minperiod/rational.hpp"

namespace minperiod {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// A point tau = re + i*im of the Siegel upper half space H_g, defining the
// principally polarized abelian variety C^g / (Z^g + tau Z^g). Both parts
// are symmetric and im is positive definite; construction goes through
// validate_period_matrix which enforces that.
//
// When the input entries are exact rationals the exact matrices are kept
// alongside the double ones, enabling exact Gram data downstream.
struct PeriodMatrix {
    int g = 0;
    Eigen::MatrixXd re;
    Eigen::MatrixXd im;
    std::optional<RatMatrix> re_exact;
    std::optional<RatMatrix> im_exact;

    bool has_exact() const { return re_exact.has_value() && im_exact.has_value(); }
};

inline constexpr double kSymTol = 1e-9; // relative symmetry tolerance

// Validates dimensions, symmetry (within kSymTol relative, then averaged)
// and positive definiteness of im. Throws Error with codes BadDimension,
// NotSymmetric, NotPositiveDefinite, BadInput (non-finite entries).
PeriodMatrix validate_period_matrix(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im,
                                    double sym_tol = kSymTol);

// Exact-rational variant. Requires exact symmetry; positive definiteness
// of im is decided exactly via leading principal minors.
PeriodMatrix validate_period_matrix(const RatMatrix& re, const RatMatrix& im);

// Block-diagonal direct sum; m(A1 x A2) = min(m(A1), m(A2)).
PeriodMatrix product(const PeriodMatrix& a, const PeriodMatrix& b);

// tau -> tau + B for symmetric integer B. Leaves m(A) invariant.
PeriodMatrix siegel_translate(const PeriodMatrix& tau, const IntMatrix& b);

// tau -> -tau^{-1}. Leaves m(A) invariant.
PeriodMatrix siegel_inverse(const PeriodMatrix& tau);

} // namespace minperiod
