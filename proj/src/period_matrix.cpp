#include "minperiod/period_matrix.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace minperiod {

namespace {

void check_square_pair(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im) {
    if (re.rows() == 0 || re.rows() != re.cols() || im.rows() != im.cols() ||
        re.rows() != im.rows())
        throw Error(Error::Code::BadDimension, "period matrix parts must be square of equal size g >= 1");
    if (!re.allFinite() || !im.allFinite())
        throw Error(Error::Code::BadInput, "period matrix has non-finite entries");
}

// Max |M - M^T| relative to max(1, |M|_inf).
double relative_asymmetry(const Eigen::MatrixXd& m) {
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
}

void check_im_positive(const Eigen::MatrixXd& im) {
    Eigen::LLT<Eigen::MatrixXd> llt(im);
    if (llt.info() != Eigen::Success)
        throw Error(Error::Code::NotPositiveDefinite, "Im(tau) is not positive definite");
}

RatMatrix rat_block_diag(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n1 = a.size(), n2 = b.size();
    RatMatrix out(n1 + n2, std::vector<Rational>(n1 + n2, Rational(0)));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) out[i][j] = a[i][j];
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) out[n1 + i][n1 + j] = b[i][j];
    return out;
}

Eigen::MatrixXd rat_to_double(const RatMatrix& m) {
    Eigen::MatrixXd out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j].to_double();
    return out;
}

} // namespace

PeriodMatrix validate_period_matrix(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im,
                                    double sym_tol) {
    check_square_pair(re, im);
    if (relative_asymmetry(re) > sym_tol)
        throw Error(Error::Code::NotSymmetric, "Re(tau) asymmetry beyond tolerance");
    if (relative_asymmetry(im) > sym_tol)
        throw Error(Error::Code::NotSymmetric, "Im(tau) asymmetry beyond tolerance");

    PeriodMatrix tau;
    tau.g = static_cast<int>(re.rows());
    tau.re = 0.5 * (re + re.transpose());
    tau.im = 0.5 * (im + im.transpose());
    check_im_positive(tau.im);
    return tau;
}

PeriodMatrix validate_period_matrix(const RatMatrix& re, const RatMatrix& im) {
    std::size_t g = re.size();
    if (g == 0 || im.size() != g)
        throw Error(Error::Code::BadDimension, "period matrix parts must be square of equal size g >= 1");
    for (const auto& row : re)
        if (row.size() != g) throw Error(Error::Code::BadDimension, "ragged Re(tau)");
    for (const auto& row : im)
        if (row.size() != g) throw Error(Error::Code::BadDimension, "ragged Im(tau)");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (re[i][j] != re[j][i] || im[i][j] != im[j][i])
                throw Error(Error::Code::NotSymmetric, "exact period matrix must be exactly symmetric");
    if (!rat_positive_definite(im))
        throw Error(Error::Code::NotPositiveDefinite, "Im(tau) is not positive definite");

    PeriodMatrix tau;
    tau.g = static_cast<int>(g);
    tau.re = rat_to_double(re);
    tau.im = rat_to_double(im);
    tau.re_exact = re;
    tau.im_exact = im;
    return tau;
}

PeriodMatrix product(const PeriodMatrix& a, const PeriodMatrix& b) {
    PeriodMatrix out;
    out.g = a.g + b.g;
    out.re = Eigen::MatrixXd::Zero(out.g, out.g);
    out.im = Eigen::MatrixXd::Zero(out.g, out.g);
    out.re.topLeftCorner(a.g, a.g) = a.re;
    out.re.bottomRightCorner(b.g, b.g) = b.re;
    out.im.topLeftCorner(a.g, a.g) = a.im;
    out.im.bottomRightCorner(b.g, b.g) = b.im;
    if (a.has_exact() && b.has_exact()) {
        out.re_exact = rat_block_diag(*a.re_exact, *b.re_exact);
        out.im_exact = rat_block_diag(*a.im_exact, *b.im_exact);
    }
    return out;
}

PeriodMatrix siegel_translate(const PeriodMatrix& tau, const IntMatrix& b) {
    if (b.rows() != tau.g || b.cols() != tau.g)
        throw Error(Error::Code::BadDimension, "translation matrix size mismatch");
    if (b != b.transpose())
        throw Error(Error::Code::NotSymmetric, "translation matrix must be symmetric");
    Eigen::MatrixXd shifted = tau.re + b.cast<double>();
    return validate_period_matrix(shifted, tau.im);
}

PeriodMatrix siegel_inverse(const PeriodMatrix& tau) {
    using CMat = Eigen::MatrixXcd;
    CMat t(tau.g, tau.g);
    t.real() = tau.re;
    t.imag() = tau.im;
    CMat inv = -t.inverse();
    // Symmetrize away inversion roundoff before validating.
    CMat sym = 0.5 * (inv + inv.transpose());
    return validate_period_matrix(sym.real(), sym.imag());
}

} // namespace minperiod
