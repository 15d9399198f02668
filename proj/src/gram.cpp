#include "minperiod/gram.hpp"

#include <Eigen/Cholesky>

namespace minperiod {

LatticeVector LatticeVector::from_coeffs(const IntVector& v) {
    if (v.size() == 0 || v.size() % 2 != 0)
        throw Error(Error::Code::BadDimension, "lattice coefficient vector must have even size 2g");
    LatticeVector out;
    Eigen::Index g = v.size() / 2;
    out.m = v.head(g);
    out.n = v.tail(g);
    return out;
}

IntVector LatticeVector::coeffs() const {
    IntVector v(m.size() + n.size());
    v << m, n;
    return v;
}

GramForm GramForm::from_matrix(const Eigen::MatrixXd& gram) {
    if (gram.rows() == 0 || gram.rows() != gram.cols() || gram.rows() % 2 != 0)
        throw Error(Error::Code::BadDimension, "Gram matrix must be square of even size 2g >= 2");
    if (!gram.allFinite())
        throw Error(Error::Code::BadInput, "Gram matrix has non-finite entries");
    double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > kSymTol * scale)
        throw Error(Error::Code::NotSymmetric, "Gram matrix asymmetry beyond tolerance");

    GramForm g;
    g.dim = static_cast<int>(gram.rows());
    g.gram = 0.5 * (gram + gram.transpose());
    Eigen::LLT<Eigen::MatrixXd> llt(g.gram);
    if (llt.info() != Eigen::Success)
        throw Error(Error::Code::NotPositiveDefinite, "Gram matrix is not positive definite");
    return g;
}

GramForm gram_from_period(const PeriodMatrix& tau) {
    const int g = tau.g;
    GramForm out;
    out.dim = 2 * g;

    if (tau.has_exact()) {
        const RatMatrix& x = *tau.re_exact;
        RatMatrix yinv = rat_inverse(*tau.im_exact);
        const RatMatrix& y = *tau.im_exact;
        RatMatrix gram(2 * g, std::vector<Rational>(2 * g, Rational(0)));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                gram[i][j] = yinv[i][j];
                Rational yinv_x(0);
                for (int k = 0; k < g; ++k) yinv_x += yinv[i][k] * x[k][j];
                gram[i][g + j] = yinv_x;
                gram[g + j][i] = yinv_x;
                Rational x_yinv_x(0);
                for (int k = 0; k < g; ++k)
                    for (int l = 0; l < g; ++l) x_yinv_x += x[k][i] * yinv[k][l] * x[l][j];
                gram[g + i][g + j] = x_yinv_x + y[i][j];
            }
        out.gram_exact = gram;
        out.gram = Eigen::MatrixXd(2 * g, 2 * g);
        for (int i = 0; i < 2 * g; ++i)
            for (int j = 0; j < 2 * g; ++j) out.gram(i, j) = gram[i][j].to_double();
        return out;
    }

    Eigen::MatrixXd yinv = tau.im.llt().solve(Eigen::MatrixXd::Identity(g, g));
    yinv = 0.5 * (yinv + yinv.transpose());
    Eigen::MatrixXd yinv_x = yinv * tau.re;
    out.gram = Eigen::MatrixXd(2 * g, 2 * g);
    out.gram.topLeftCorner(g, g) = yinv;
    out.gram.topRightCorner(g, g) = yinv_x;
    out.gram.bottomLeftCorner(g, g) = yinv_x.transpose();
    out.gram.bottomRightCorner(g, g) = tau.re.transpose() * yinv_x + tau.im;
    out.gram = 0.5 * (out.gram + out.gram.transpose()).eval();
    return out;
}

double hermitian_norm(const PeriodMatrix& tau, const LatticeVector& v) {
    if (v.m.size() != tau.g || v.n.size() != tau.g)
        throw Error(Error::Code::BadDimension, "lattice vector size mismatch");
    Eigen::VectorXd m = v.m.cast<double>();
    Eigen::VectorXd n = v.n.cast<double>();
    // lambda = m + tau n
    Eigen::VectorXd lam_re = m + tau.re * n;
    Eigen::VectorXd lam_im = tau.im * n;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(tau.im);
    Eigen::VectorXd w_re = ldlt.solve(lam_re);
    Eigen::VectorXd w_im = ldlt.solve(lam_im);
    return lam_re.dot(w_re) + lam_im.dot(w_im);
}

double quadratic_value(const GramForm& g, const IntVector& v) {
    Eigen::VectorXd x = v.cast<double>();
    return x.dot(g.gram * x);
}

Rational quadratic_value_exact(const RatMatrix& gram, const IntVector& v) {
    Rational q(0);
    const auto n = static_cast<Eigen::Index>(gram.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            q += gram[i][j] * Rational(v[i]) * Rational(v[j]);
        }
    }
    return q;
}

} // namespace minperiod
