#include "minperiod/lll.hpp"

#include <cmath>
#include <cstdlib>

namespace minperiod {

namespace detail {

namespace {

// Gram-Schmidt data (mu, squared norms B) recomputed from the current
// Gram matrix. Throws when positivity is lost, which signals an
// effectively singular input.
void gso(const Eigen::MatrixXd& a, Eigen::MatrixXd& mu, Eigen::VectorXd& b) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            double s = a(i, j);
            for (Eigen::Index k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * b(k);
            mu(i, j) = s / b(j);
        }
        double s = a(i, i);
        for (Eigen::Index k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * b(k);
        if (!(s > 0.0))
            throw Error(Error::Code::NumericalBreakdown,
                        "Gram-Schmidt lost positivity; input too ill-conditioned");
        b(i) = s;
    }
}

} // namespace

ReducedBasis lll_reduce_raw(const Eigen::MatrixXd& gram, double delta) {
    if (delta <= 0.25 || delta >= 1.0)
        throw Error(Error::Code::BadInput, "LLL delta must lie in (1/4, 1)");
    const Eigen::Index n = gram.rows();

    Eigen::MatrixXd a = gram;
    IntMatrix u = IntMatrix::Identity(n, n);
    Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);

    // basis_i -= q * basis_j, applied to the Gram matrix and to U.
    auto row_op = [&](Eigen::Index i, Eigen::Index j, std::int64_t q) {
        a.row(i) -= static_cast<double>(q) * a.row(j);
        a.col(i) -= static_cast<double>(q) * a.col(j);
        u.col(i) -= q * u.col(j);
    };
    auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
        a.row(i).swap(a.row(j));
        a.col(i).swap(a.col(j));
        u.col(i).swap(u.col(j));
    };

    gso(a, mu, b);
    const long max_sweeps = 20000 * static_cast<long>(n) * static_cast<long>(n) + 10000;
    long sweeps = 0;
    Eigen::Index k = 1;
    while (k < n) {
        if (++sweeps > max_sweeps)
            throw Error(Error::Code::NumericalBreakdown, "LLL failed to terminate");
        for (Eigen::Index j = k - 1; j >= 0; --j) {
            std::int64_t q = std::llround(mu(k, j));
            if (q != 0) {
                row_op(k, j, q);
                gso(a, mu, b);
            }
        }
        if (b(k) >= (delta - mu(k, k - 1) * mu(k, k - 1)) * b(k - 1)) {
            ++k;
        } else {
            swap_rows(k - 1, k);
            gso(a, mu, b);
            k = std::max<Eigen::Index>(1, k - 1);
        }
    }

    ReducedBasis out;
    out.basis = std::move(u);
    out.gram_reduced = 0.5 * (a + a.transpose());
    return out;
}

} // namespace detail

ReducedBasis lll_reduce(const GramForm& g, double delta) {
    return detail::lll_reduce_raw(g.gram, delta);
}

std::int64_t int_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw Error(Error::Code::BadDimension, "determinant of non-square matrix");
    const Eigen::Index n = m.rows();
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);

    const __int128 limit = (__int128)1 << 62;
    auto guard = [&](__int128 v) {
        if (v > limit || v < -limit)
            throw Error(Error::Code::NumericalBreakdown, "integer determinant overflow");
        return v;
    };

    int sign = 1;
    __int128 prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a[i][j] = (guard(a[i][j]) * guard(a[k][k]) - guard(a[i][k]) * guard(a[k][j])) / prev;
        prev = a[k][k];
    }
    __int128 det = sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN)
        throw Error(Error::Code::NumericalBreakdown, "integer determinant overflow");
    return static_cast<std::int64_t>(det);
}

} // namespace minperiod
