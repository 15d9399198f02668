#include "minperiod/search.hpp"

#include <cmath>

#include "minperiod/bounds.hpp"
#include "minperiod/rng.hpp"
#include "minperiod/svp.hpp"

#include <Eigen/Eigenvalues>

namespace minperiod {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// X symmetric in [-1/2, 1/2], Y = L L^T + 0.1 I.
PeriodMatrix draw_siegel(int g, Rng& rng, double spread) {
    Eigen::MatrixXd x(g, g), l = Eigen::MatrixXd::Zero(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            x(i, j) = rng.uniform(-0.5, 0.5);
            x(j, i) = x(i, j);
        }
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= i; ++j) l(i, j) = rng.uniform(-spread, spread);
    Eigen::MatrixXd y = l * l.transpose() + 0.1 * Eigen::MatrixXd::Identity(g, g);
    return validate_period_matrix(x, y);
}

double wrap_half(double v) {
    // Into [-1/2, 1/2]; m(A) is invariant under integer translations of X.
    return v - std::round(v);
}

PeriodMatrix perturb(const PeriodMatrix& tau, Rng& rng, double step) {
    const int g = tau.g;
    Eigen::MatrixXd x = tau.re, y = tau.im;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            x(i, j) = wrap_half(x(i, j) + step * rng.uniform(-1.0, 1.0));
            x(j, i) = x(i, j);
            y(i, j) += step * rng.uniform(-1.0, 1.0);
            y(j, i) = y(i, j);
        }
    // Deterministic repair if the perturbation lost definiteness.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < 1e-3) y += (1e-3 - lo) * Eigen::MatrixXd::Identity(g, g);
    return validate_period_matrix(x, y);
}

} // namespace

PeriodMatrix random_siegel(int g, std::uint64_t seed, double spread) {
    if (g < 1) throw Error(Error::Code::BadDimension, "g must be >= 1");
    if (!(spread > 0)) throw Error(Error::Code::BadInput, "spread must be positive");
    Rng rng(seed);
    return draw_siegel(g, rng, spread);
}

SearchResult search_max_min_period(int g, long iterations, std::uint64_t seed, double spread) {
    if (g < 1) throw Error(Error::Code::BadDimension, "g must be >= 1");
    if (2 * g > kEnumDimCap)
        throw Error(Error::Code::DimensionTooLarge, "2g exceeds the enumeration cap");
    if (iterations < 1) throw Error(Error::Code::BadInput, "need at least one iteration");

    Rng rng(seed);
    const double guard = 4.0 / kPi * ekl_upper(g) + 1e-6;

    SearchResult out;
    out.g = g;
    out.iterations = iterations;
    out.seed = seed;
    out.bs1_reference = bs1_lower(g);

    double best = -1.0;
    PeriodMatrix incumbent;
    for (long it = 0; it < iterations; ++it) {
        // Fresh draws every 16 iterations escape local basins; in between,
        // a hill climb with a step that decays in the absolute iteration
        // index (so longer runs extend shorter ones candidate-for-candidate).
        PeriodMatrix cand;
        if (best < 0 || it % 16 == 0) {
            cand = draw_siegel(g, rng, spread);
        } else {
            const double step = 0.25 / (1.0 + static_cast<double>(it) / 200.0);
            cand = perturb(incumbent, rng, step);
        }
        const double m = min_period_length(cand);
        if (m > guard)
            throw Error(Error::Code::NumericalBreakdown,
                        "sample violates m(A) <= (4/pi)(g!)^{1/g}; this is a bug");
        if (m > best) {
            best = m;
            incumbent = cand;
        }
    }

    out.best_tau = incumbent;
    out.best_m = best;
    out.ratio = best / out.bs1_reference;
    return out;
}

} // namespace minperiod
