#pragma once

#include <cmath>
#include <cstdint>

#include "minperiod/lll.hpp"
#include "minperiod/rng.hpp"
#include "minperiod/search.hpp"

namespace testsupport {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline bool rel_close(double a, double b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

// Unimodular matrix built from random shears, swaps and sign flips.
inline minperiod::IntMatrix random_unimodular(int n, std::uint64_t seed, int ops = 24) {
    minperiod::Rng rng(seed);
    minperiod::IntMatrix u = minperiod::IntMatrix::Identity(n, n);
    for (int k = 0; k < ops; ++k) {
        const int i = static_cast<int>(rng.uniform_int(0, n - 1));
        int j = static_cast<int>(rng.uniform_int(0, n - 1));
        switch (rng.uniform_int(0, 2)) {
            case 0: {
                if (i == j) j = (j + 1) % n;
                const std::int64_t c = rng.uniform_int(-2, 2);
                u.col(i) += c * u.col(j);
                break;
            }
            case 1:
                if (i != j) u.col(i).swap(u.col(j));
                break;
            default:
                u.col(i) = -u.col(i);
        }
    }
    return u;
}

// Hexagonal elliptic curve tau = 1/2 + (sqrt(3)/2) i.
inline minperiod::PeriodMatrix hexagonal_tau() {
    Eigen::MatrixXd re(1, 1), im(1, 1);
    re << 0.5;
    im << std::sqrt(3.0) / 2.0;
    return minperiod::validate_period_matrix(re, im);
}

// Square elliptic curve tau = i, exact path.
inline minperiod::PeriodMatrix square_tau() {
    using minperiod::Rational;
    return minperiod::validate_period_matrix(minperiod::RatMatrix{{Rational(0)}},
                                             minperiod::RatMatrix{{Rational(1)}});
}

inline minperiod::LatticeVector lv(std::initializer_list<std::int64_t> m,
                                   std::initializer_list<std::int64_t> n) {
    minperiod::LatticeVector v;
    v.m.resize(static_cast<Eigen::Index>(m.size()));
    v.n.resize(static_cast<Eigen::Index>(n.size()));
    Eigen::Index i = 0;
    for (auto x : m) v.m[i++] = x;
    i = 0;
    for (auto x : n) v.n[i++] = x;
    return v;
}

} // namespace testsupport
