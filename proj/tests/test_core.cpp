#include <doctest.h>

#include "minperiod/gram.hpp"
#include "minperiod/svp.hpp"
#include "support.hpp"

using namespace minperiod;
using namespace testsupport;

TEST_SUITE("core") {

TEST_CASE("square elliptic curve validates") {
    Eigen::MatrixXd re(1, 1), im(1, 1);
    re << 0.0;
    im << 1.0;
    PeriodMatrix tau = validate_period_matrix(re, im);
    CHECK(tau.g == 1);
    CHECK(tau.im(0, 0) == 1.0);
}

TEST_CASE("negative imaginary part is rejected") {
    Eigen::MatrixXd re(1, 1), im(1, 1);
    re << 0.0;
    im << -1.0;
    CHECK_THROWS_WITH_AS(validate_period_matrix(re, im), doctest::Contains("positive definite"),
                         Error);
    try {
        validate_period_matrix(re, im);
    } catch (const Error& e) {
        CHECK(e.code() == Error::Code::NotPositiveDefinite);
    }
}

TEST_CASE("dimension errors") {
    Eigen::MatrixXd empty(0, 0);
    CHECK_THROWS_AS(validate_period_matrix(empty, empty), Error);
    Eigen::MatrixXd a(2, 2), b(1, 1);
    a.setIdentity();
    b.setIdentity();
    CHECK_THROWS_AS(validate_period_matrix(a, b), Error);
    Eigen::MatrixXd nan2 = Eigen::MatrixXd::Constant(1, 1, std::nan(""));
    CHECK_THROWS_AS(validate_period_matrix(nan2, b), Error);
}

TEST_CASE("asymmetry beyond tolerance is rejected, below it averaged") {
    Eigen::MatrixXd re(2, 2), im(2, 2);
    re << 0.0, 1e-3, 0.0, 0.0;
    im = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(validate_period_matrix(re, im), Error);

    re << 0.0, 1e-10, 0.0, 0.0;
    PeriodMatrix tau = validate_period_matrix(re, im);
    CHECK(tau.re(0, 1) == doctest::Approx(0.5e-10));
    CHECK(tau.re(0, 1) == tau.re(1, 0));
}

TEST_CASE("g=2 example with positive spectrum validates") {
    Eigen::MatrixXd re(2, 2), im(2, 2);
    re << 0.0, 0.5, 0.5, 0.0;
    im << 1.2, 0.1, 0.1, 0.9;
    PeriodMatrix tau = validate_period_matrix(re, im);
    // 2x2 eigenvalue oracle: trace/2 +- sqrt((trace/2)^2 - det).
    const double mean = (1.2 + 0.9) / 2.0;
    const double det = 1.2 * 0.9 - 0.01;
    const double disc = std::sqrt(mean * mean - det);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tau.im);
    CHECK(es.eigenvalues()(0) == doctest::Approx(mean - disc));
    CHECK(es.eigenvalues()(1) == doctest::Approx(mean + disc));
    CHECK(es.eigenvalues()(0) > 0);
}

TEST_CASE("gram matrix of tau = i is the identity, exactly on the rational path") {
    GramForm g = gram_from_period(square_tau());
    REQUIRE(g.gram_exact.has_value());
    const RatMatrix& e = *g.gram_exact;
    CHECK(e[0][0] == Rational(1));
    CHECK(e[0][1] == Rational(0));
    CHECK(e[1][0] == Rational(0));
    CHECK(e[1][1] == Rational(1));
    CHECK(g.gram.isIdentity(0.0));
}

TEST_CASE("gram matrix of the hexagonal curve") {
    GramForm g = gram_from_period(hexagonal_tau());
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(g.gram(0, 0) == doctest::Approx(2 * s).epsilon(1e-14));
    CHECK(g.gram(0, 1) == doctest::Approx(s).epsilon(1e-14));
    CHECK(g.gram(1, 0) == doctest::Approx(s).epsilon(1e-14));
    CHECK(g.gram(1, 1) == doctest::Approx(2 * s).epsilon(1e-14));
}

TEST_CASE("exact gram for rational tau") {
    PeriodMatrix tau = validate_period_matrix(RatMatrix{{Rational(1, 2)}},
                                              RatMatrix{{Rational(3, 2)}});
    GramForm g = gram_from_period(tau);
    REQUIRE(g.gram_exact.has_value());
    const RatMatrix& e = *g.gram_exact;
    CHECK(e[0][0] == Rational(2, 3));
    CHECK(e[0][1] == Rational(1, 3));
    CHECK(e[1][0] == Rational(1, 3));
    CHECK(e[1][1] == Rational(5, 3)); // 1/4 * 2/3 + 3/2
}

TEST_CASE("hermitian norm examples") {
    PeriodMatrix sq = square_tau();
    CHECK(hermitian_norm(sq, lv({1}, {0})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hermitian_norm(sq, lv({3}, {4})) == doctest::Approx(25.0).epsilon(1e-14));
    PeriodMatrix hex = hexagonal_tau();
    CHECK(hermitian_norm(hex, lv({0}, {1})) ==
          doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("gram form reproduces the complex hermitian oracle") {
    for (int g = 1; g <= 3; ++g) {
        PeriodMatrix tau = random_siegel(g, 100 + static_cast<std::uint64_t>(g));
        GramForm form = gram_from_period(tau);
        Rng rng(77);
        for (int k = 0; k < 100; ++k) {
            IntVector v(2 * g);
            for (int i = 0; i < 2 * g; ++i) v[i] = rng.uniform_int(-10, 10);
            if (v.isZero()) v[0] = 1;
            LatticeVector lvec = LatticeVector::from_coeffs(v);
            CHECK(rel_close(quadratic_value(form, v), hermitian_norm(tau, lvec), 1e-10));
        }
    }
}

TEST_CASE("gram form is SPD with unit determinant and even values") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int g = 1 + static_cast<int>(rng.uniform_int(0, 3));
        PeriodMatrix tau = random_siegel(g, 500 + trial);
        GramForm form = gram_from_period(tau);
        CHECK_NOTHROW(GramForm::from_matrix(form.gram));
        // The principal polarization is unimodular on the period lattice.
        CHECK(rel_close(form.gram.determinant(), 1.0, 1e-8));
        IntVector v(2 * g);
        for (int i = 0; i < 2 * g; ++i) v[i] = rng.uniform_int(-4, 4);
        CHECK(quadratic_value(form, v) == quadratic_value(form, IntVector(-v)));
        if (!v.isZero()) CHECK(quadratic_value(form, v) > 0);
    }
}

TEST_CASE("product is block diagonal and m multiplies as a minimum") {
    PeriodMatrix two_i = validate_period_matrix(RatMatrix{{Rational(0)}},
                                                RatMatrix{{Rational(2)}});
    PeriodMatrix prod = product(square_tau(), two_i);
    CHECK(prod.g == 2);
    CHECK(prod.im(0, 0) == 1.0);
    CHECK(prod.im(1, 1) == 2.0);
    CHECK(prod.im(0, 1) == 0.0);
    CHECK(prod.has_exact());

    // Brute-force oracle over |m|,|n| <= 10 for the 2i-curve: min of m^2/2 + 2n^2.
    GramForm g2 = gram_from_period(two_i);
    double best = 1e300;
    for (int m = -10; m <= 10; ++m)
        for (int n = -10; n <= 10; ++n) {
            if (m == 0 && n == 0) continue;
            IntVector v(2);
            v << m, n;
            best = std::min(best, quadratic_value(g2, v));
        }
    CHECK(best == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(min_period_length(prod) == doctest::Approx(0.5).epsilon(1e-12));

    for (int trial = 0; trial < 50; ++trial) {
        const int ga = 1 + trial % 2, gb = 1 + (trial / 2) % 2;
        PeriodMatrix a = random_siegel(ga, 900 + trial);
        PeriodMatrix b = random_siegel(gb, 5000 + trial);
        const double expected = std::min(min_period_length(a), min_period_length(b));
        CHECK(rel_close(min_period_length(product(a, b)), expected, 1e-12));
    }
}

TEST_CASE("m(A) is invariant under the modular action") {
    Rng rng(31);
    for (int g = 1; g <= 2; ++g) {
        for (int trial = 0; trial < 50; ++trial) {
            PeriodMatrix tau = random_siegel(g, 7000 + 100 * g + trial);
            const double m = min_period_length(tau);

            IntMatrix b(g, g);
            for (int i = 0; i < g; ++i)
                for (int j = i; j < g; ++j) {
                    b(i, j) = rng.uniform_int(-3, 3);
                    b(j, i) = b(i, j);
                }
            CHECK(rel_close(min_period_length(siegel_translate(tau, b)), m, 1e-8));
            CHECK(rel_close(min_period_length(siegel_inverse(tau)), m, 1e-8));
        }
    }
}

} // TEST_SUITE
