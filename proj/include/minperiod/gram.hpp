#pragma once

#include <Eigen/Dense>
#include <optional>

#include "minperiod/period_matrix.hpp"

namespace minperiod {

// Integer lattice vector (m, n) representing the period m + tau*n.
struct LatticeVector {
    IntVector m;
    IntVector n;

    static LatticeVector from_coeffs(const IntVector& v); // splits halves
    IntVector coeffs() const;                             // concatenation

    bool is_zero() const { return m.isZero() && n.isZero(); }
};

// Positive definite quadratic form Q(v) = v^T gram v on Z^{2g}, the
// restriction of the polarization's Hermitian form to the period lattice.
// m(A) is its minimum over nonzero integer vectors.
struct GramForm {
    int dim = 0; // 2g
    Eigen::MatrixXd gram;
    std::optional<RatMatrix> gram_exact;

    // Validates symmetry, even dimension >= 2 and positive definiteness.
    static GramForm from_matrix(const Eigen::MatrixXd& gram);
};

// Gram matrix of the principal polarization in the basis (m, n):
// Q(m, n) = (m + Xn)^T Y^{-1} (m + Xn) + n^T Y n  with X = Re tau, Y = Im tau,
// in block form [[Y^{-1}, Y^{-1}X], [X Y^{-1}, X Y^{-1} X + Y]].
// Exact rational input yields an exact Gram matrix as well.
GramForm gram_from_period(const PeriodMatrix& tau);

// H(lambda, lambda) for lambda = m + tau n, computed directly in complex
// arithmetic as conj(lambda)^T Y^{-1} lambda via an LDLT solve. Serves as
// the independent oracle for gram_from_period.
double hermitian_norm(const PeriodMatrix& tau, const LatticeVector& v);

// v^T gram v in doubles.
double quadratic_value(const GramForm& g, const IntVector& v);

// Exact value when gram_exact is present.
Rational quadratic_value_exact(const RatMatrix& gram, const IntVector& v);

} // namespace minperiod
