#include "minperiod/rational.hpp"

namespace minperiod {

namespace {

std::size_t square_size(const RatMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error(Error::Code::BadDimension, "ragged rational matrix");
    return n;
}

} // namespace

RatMatrix rat_inverse(const RatMatrix& m) {
    std::size_t n = square_size(m);
    if (n == 0) throw Error(Error::Code::BadDimension, "empty matrix");

    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw Error(Error::Code::NumericalBreakdown, "singular rational matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);

        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational rat_determinant(RatMatrix m) {
    std::size_t n = square_size(m);
    if (n == 0) throw Error(Error::Code::BadDimension, "empty matrix");

    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational p = m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            Rational f = m[i][col] / p;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

bool rat_positive_definite(const RatMatrix& m) {
    std::size_t n = square_size(m);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
        if (!(rat_determinant(std::move(minor)) > Rational(0))) return false;
    }
    return true;
}

} // namespace minperiod
