#include "minperiod/blowup.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

#include "minperiod/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace minperiod {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Cubic with prescribed endpoint values and (t-scaled) endpoint slopes.
std::array<double, 4> hermite_cubic(double p0, double v0, double p1, double v1) {
    return {p0, v0, -3 * p0 - 2 * v0 + 3 * p1 - v1, 2 * p0 + v0 - 2 * p1 + v1};
}

double eval_cubic(const std::array<double, 4>& c, double t) {
    return ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
}

double eval_cubic_prime(const std::array<double, 4>& c, double t) {
    return (3 * c[3] * t + 2 * c[2]) * t + c[1];
}

// Integral of the cubic over [0, t].
double eval_cubic_integral(const std::array<double, 4>& c, double t) {
    return (((c[3] / 4 * t + c[2] / 3) * t + c[1] / 2) * t + c[0]) * t;
}

double full_integral(const std::array<double, 4>& c) { return eval_cubic_integral(c, 1.0); }

const BlowupProfile::Piece* find_piece(const BlowupProfile& p, double r) {
    for (const auto& piece : p.pieces)
        if (r <= piece.lo + piece.width) return &piece;
    return &p.pieces.back();
}

double norm_of(const Eigen::VectorXd& z) { return z.norm(); }

void require_nonzero(const Eigen::VectorXd& z) {
    if (!(z.norm() > 0)) throw Error(Error::Code::ZeroInput, "point must be nonzero");
}

// Uniform direction on S^{2n-1}.
Eigen::VectorXd random_direction(Rng& rng, int dim) {
    Eigen::VectorXd v(dim);
    double norm2 = 0;
    do {
        for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
        norm2 = v.squaredNorm();
    } while (!(norm2 > 0));
    return v / std::sqrt(norm2);
}

// Uniform in the shell rmin < |z| < rmax with respect to volume.
Eigen::VectorXd random_in_shell(Rng& rng, int dim, double rmin, double rmax) {
    const double u = rng.uniform01();
    const double p = static_cast<double>(dim);
    const double r = std::pow(std::pow(rmin, p) + u * (std::pow(rmax, p) - std::pow(rmin, p)), 1.0 / p);
    return r * random_direction(rng, dim);
}

using SampleCheck = double (*)(const BlowupProfile&, const Eigen::VectorXd&, PullbackMode);

double outer_deviation(const BlowupProfile& p, const Eigen::VectorXd& z, PullbackMode mode) {
    TwoForm t = pullback_two_form(p, z, mode);
    return (t.matrix - omega_std_matrix(p.n)).cwiseAbs().maxCoeff();
}

double inner_deviation(const BlowupProfile& p, const Eigen::VectorXd& z, PullbackMode mode) {
    TwoForm t = pullback_two_form(p, z, mode);
    Eigen::MatrixXd target =
        omega_std_matrix(p.n) + p.lambda * p.lambda * fs_pullback_form(z).matrix;
    return (t.matrix - target).cwiseAbs().maxCoeff();
}

RegionReport sweep_max(const BlowupProfile& p, const std::vector<Eigen::VectorXd>& points,
                       SampleCheck check, PullbackMode mode, const char* region, double tol,
                       bool parallel) {
    const long count = static_cast<long>(points.size());
    double max_dev = 0.0;
    if (parallel) {
#pragma omp parallel for reduction(max : max_dev) schedule(static)
        for (long i = 0; i < count; ++i)
            max_dev = std::max(max_dev, check(p, points[i], mode));
    } else {
        for (long i = 0; i < count; ++i) max_dev = std::max(max_dev, check(p, points[i], mode));
    }
    RegionReport r;
    r.region = region;
    r.samples = count;
    r.max_abs_deviation = max_dev;
    r.tol = tol;
    r.pass = max_dev <= tol;
    return r;
}

std::vector<Eigen::VectorXd> presample_shell(const BlowupProfile& p, long samples,
                                             std::uint64_t seed, double rmin, double rmax) {
    Rng rng(seed);
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (long i = 0; i < samples; ++i) pts.push_back(random_in_shell(rng, 2 * p.n, rmin, rmax));
    return pts;
}

RegionReport positivity_impl(const BlowupProfile& p, long samples, std::uint64_t seed,
                             bool parallel) {
    const double b = p.lambda * (1.0 + p.eta);
    // Stratified over the three regimes so the thin blend shell cannot be
    // missed by volume-uniform sampling.
    Rng rng(seed);
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (long i = 0; i < samples; ++i) {
        switch (i % 3) {
            case 0: pts.push_back(random_in_shell(rng, 2 * p.n, 0.0, p.delta)); break;
            case 1: pts.push_back(random_in_shell(rng, 2 * p.n, p.delta, b)); break;
            default: pts.push_back(random_in_shell(rng, 2 * p.n, b, 3.0 * p.lambda)); break;
        }
    }

    const Eigen::MatrixXd j = complex_structure_matrix(p.n);
    const long count = static_cast<long>(pts.size());
    double min_eig = std::numeric_limits<double>::infinity();

    auto sample_min_eig = [&](long i) {
        TwoForm t = pullback_two_form(p, pts[i], PullbackMode::Analytic);
        Eigen::MatrixXd mj = t.matrix * j;
        Eigen::MatrixXd h = 0.5 * (mj + mj.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    };

    if (parallel) {
#pragma omp parallel for reduction(min : min_eig) schedule(static)
        for (long i = 0; i < count; ++i) min_eig = std::min(min_eig, sample_min_eig(i));
    } else {
        for (long i = 0; i < count; ++i) min_eig = std::min(min_eig, sample_min_eig(i));
    }

    RegionReport r;
    r.region = "positivity";
    r.samples = count;
    r.min_eigenvalue = min_eig;
    r.max_abs_deviation = std::max(0.0, -min_eig);
    r.tol = 0.0;
    r.pass = min_eig > 0.0;
    return r;
}

double fs_normalization_impl(int resolution, bool parallel) {
    if (resolution < 64)
        throw Error(Error::Code::BadInput, "normalization grid resolution must be >= 64");
    const int nr = resolution, nth = resolution;
    const double dv = 1.0 / nr;
    const double dth = (2 * kPi) / nth;

    // Line {[1 : w]} in P^{n-1}; chart coordinate w = r e^{i theta} with
    // r = tan(u), u = (pi/2) B(v). The taper B(v) = v - g sin(2 pi v)/(2 pi)
    // shrinks the quadrature weight near the endpoints, where the
    // midpoint rule's h^2 error constant lives, but keeps the rule a
    // plain second-order one. The density is read off fs_pullback_form at
    // z = (1, w) on the chart tangent frame, not from the closed form.
    constexpr double kTaper = 0.65;
    auto cell = [&](int i, int j) {
        const double v = (i + 0.5) * dv;
        const double b = v - kTaper * std::sin(2 * kPi * v) / (2 * kPi);
        const double bprime = 1.0 - kTaper * std::cos(2 * kPi * v);
        const double u = (kPi / 2) * b;
        const double th = (j + 0.5) * dth;
        const double r = std::tan(u);
        const double dr_dv = (1.0 + r * r) * (kPi / 2) * bprime;
        Eigen::VectorXd z(4);
        z << 1.0, 0.0, r * std::cos(th), r * std::sin(th);
        Eigen::VectorXd ex = Eigen::VectorXd::Zero(4), ey = Eigen::VectorXd::Zero(4);
        ex[2] = 1.0;
        ey[3] = 1.0;
        const double density = fs_pullback_form(z)(ex, ey);
        return density * r * dr_dv * dv * dth;
    };

    double total = 0.0;
    if (parallel) {
#pragma omp parallel for reduction(+ : total) schedule(static)
        for (int i = 0; i < nr; ++i) {
            double row = 0.0;
            for (int j = 0; j < nth; ++j) row += cell(i, j);
            total += row;
        }
    } else {
        for (int i = 0; i < nr; ++i) {
            double row = 0.0;
            for (int j = 0; j < nth; ++j) row += cell(i, j);
            total += row;
        }
    }
    return total;
}

} // namespace

BlowupProfile BlowupProfile::make(int n, double lambda, double eta, double delta_opt) {
    if (n < 2) throw Error(Error::Code::BadDimension, "complex dimension must be >= 2");
    if (!(lambda > 0) || !(eta > 0))
        throw Error(Error::Code::BadInput, "lambda and eta must be positive");
    const double delta = delta_opt < 0 ? lambda / 10.0 : delta_opt;
    if (!(delta > 0) || !(delta < lambda))
        throw Error(Error::Code::BadInput, "delta must satisfy 0 < delta < lambda");

    const double a = delta;
    const double b = lambda * (1.0 + eta);
    const double fa = std::sqrt(lambda * lambda + a * a);
    const double da = a / fa;                         // phi'(a)
    const double sa = lambda * lambda / (fa * fa * fa); // phi''(a)
    const double df = b - fa;
    if (!(df > 1e-12 * lambda))
        throw Error(Error::Code::InfeasibleProfile,
                    "no increasing blend exists: need sqrt(lambda^2+delta^2) < lambda(1+eta); "
                    "shrink delta (delta < lambda sqrt((1+eta)^2-1))");

    const double span = b - a;
    double w = std::min(span / 4.0, df / (da + 1.0));

    BlowupProfile p;
    p.n = n;
    p.lambda = lambda;
    p.eta = eta;
    p.delta = delta;

    for (int attempt = 0; attempt < 60; ++attempt, w *= 0.5) {
        const double floor_m = (df - w * (da + 1.0) / 2.0 - sa * w * w / 12.0) / (span - w);
        if (!(floor_m > 0)) continue;

        Piece left{a, w, hermite_cubic(da, sa * w, floor_m, 0.0), fa};
        Piece mid{a + w, span - 2 * w, {floor_m, 0, 0, 0},
                  fa + w * full_integral(left.dcoef)};
        Piece right{b - w, w, hermite_cubic(floor_m, 0.0, 1.0, 0.0),
                    mid.base + mid.width * floor_m};

        double min_slope = std::numeric_limits<double>::infinity();
        for (const auto& piece : {left, mid, right})
            for (int i = 0; i <= 2000; ++i)
                min_slope = std::min(min_slope, eval_cubic(piece.dcoef, i / 2000.0));
        if (!(min_slope > 1e-12)) continue;

        p.pieces = {left, mid, right};
        p.min_blend_slope = min_slope;
        return p;
    }
    throw Error(Error::Code::InfeasibleProfile, "could not construct a monotone C^2 blend");
}

double phi(const BlowupProfile& p, double r) {
    if (!(r > 0)) throw Error(Error::Code::BadInput, "phi requires r > 0");
    if (r <= p.delta) return std::sqrt(p.lambda * p.lambda + r * r);
    if (r >= p.lambda * (1.0 + p.eta)) return r;
    const auto* pc = find_piece(p, r);
    const double t = (r - pc->lo) / pc->width;
    return pc->base + pc->width * eval_cubic_integral(pc->dcoef, t);
}

double phi_prime(const BlowupProfile& p, double r) {
    if (!(r > 0)) throw Error(Error::Code::BadInput, "phi requires r > 0");
    if (r <= p.delta) return r / std::sqrt(p.lambda * p.lambda + r * r);
    if (r >= p.lambda * (1.0 + p.eta)) return 1.0;
    const auto* pc = find_piece(p, r);
    return eval_cubic(pc->dcoef, (r - pc->lo) / pc->width);
}

double phi_second(const BlowupProfile& p, double r) {
    if (!(r > 0)) throw Error(Error::Code::BadInput, "phi requires r > 0");
    if (r <= p.delta) {
        const double f = std::sqrt(p.lambda * p.lambda + r * r);
        return p.lambda * p.lambda / (f * f * f);
    }
    if (r >= p.lambda * (1.0 + p.eta)) return 0.0;
    const auto* pc = find_piece(p, r);
    return eval_cubic_prime(pc->dcoef, (r - pc->lo) / pc->width) / pc->width;
}

Eigen::VectorXd map_F(const BlowupProfile& p, const Eigen::VectorXd& z) {
    require_nonzero(z);
    const double r = norm_of(z);
    return (phi(p, r) / r) * z;
}

Eigen::MatrixXd map_F_jacobian(const BlowupProfile& p, const Eigen::VectorXd& z) {
    require_nonzero(z);
    const double r = norm_of(z);
    const double psi = phi(p, r) / r;
    const double dphi = phi_prime(p, r);
    Eigen::VectorXd zhat = z / r;
    Eigen::MatrixXd out = psi * Eigen::MatrixXd::Identity(z.size(), z.size());
    out += (dphi - psi) * (zhat * zhat.transpose());
    return out;
}

Eigen::MatrixXd omega_std_matrix(int n) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int p = 0; p < n; ++p) {
        m(2 * p, 2 * p + 1) = 1.0;
        m(2 * p + 1, 2 * p) = -1.0;
    }
    return m;
}

Eigen::MatrixXd complex_structure_matrix(int n) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int p = 0; p < n; ++p) {
        m(2 * p + 1, 2 * p) = 1.0;  // J dx = dy
        m(2 * p, 2 * p + 1) = -1.0; // J dy = -dx
    }
    return m;
}

TwoForm pullback_two_form(const BlowupProfile& p, const Eigen::VectorXd& z, PullbackMode mode,
                          double h) {
    require_nonzero(z);
    if (static_cast<int>(z.size()) != 2 * p.n)
        throw Error(Error::Code::BadDimension, "point dimension does not match the profile");

    Eigen::MatrixXd df;
    if (mode == PullbackMode::Analytic) {
        df = map_F_jacobian(p, z);
    } else {
        const double r = norm_of(z);
        if (h < 0) h = 1e-6 * std::max(1.0, r);
        if (!(h > 0)) throw Error(Error::Code::BadInput, "finite-difference step must be positive");
        if (r + h == r || h >= 0.5 * r)
            throw Error(Error::Code::StepTooSmall,
                        "finite-difference step cannot resolve the base point");
        df.resize(z.size(), z.size());
        for (Eigen::Index j = 0; j < z.size(); ++j) {
            Eigen::VectorXd zp = z, zm = z;
            zp[j] += h;
            zm[j] -= h;
            df.col(j) = (map_F(p, zp) - map_F(p, zm)) / (2.0 * h);
        }
    }

    Eigen::MatrixXd m = df.transpose() * omega_std_matrix(p.n) * df;
    TwoForm out;
    out.base = z;
    out.matrix = 0.5 * (m - m.transpose());
    return out;
}

TwoForm fs_pullback_form(const Eigen::VectorXd& z) {
    require_nonzero(z);
    if (z.size() % 2 != 0)
        throw Error(Error::Code::BadDimension, "point must live in R^{2n}");
    const int n = static_cast<int>(z.size() / 2);
    const double norm2 = z.squaredNorm();
    const double norm4 = norm2 * norm2;

    // h_pq = (delta_pq |z|^2 - conj(z_p) z_q) / |z|^4, translated into the
    // interleaved real basis.
    Eigen::MatrixXd m(2 * n, 2 * n);
    for (int p = 0; p < n; ++p) {
        const std::complex<double> zp(z[2 * p], z[2 * p + 1]);
        for (int q = 0; q < n; ++q) {
            const std::complex<double> zq(z[2 * q], z[2 * q + 1]);
            std::complex<double> hpq = -std::conj(zp) * zq;
            if (p == q) hpq += norm2;
            hpq /= norm4;
            const double a = hpq.real(), b = hpq.imag();
            m(2 * p, 2 * q) = -b;
            m(2 * p, 2 * q + 1) = a;
            m(2 * p + 1, 2 * q) = -a;
            m(2 * p + 1, 2 * q + 1) = -b;
        }
    }
    TwoForm out;
    out.base = z;
    out.matrix = 0.5 * (m - m.transpose());
    return out;
}

RegionReport verify_region_outer(const BlowupProfile& p, long samples, double tol,
                                 std::uint64_t seed, PullbackMode mode) {
    const double b = p.lambda * (1.0 + p.eta);
    auto pts = presample_shell(p, samples, seed, b * (1.0 + 1e-9), 3.0 * p.lambda);
    return sweep_max(p, pts, outer_deviation, mode, "outer", tol, true);
}

RegionReport verify_region_outer_serial(const BlowupProfile& p, long samples, double tol,
                                        std::uint64_t seed, PullbackMode mode) {
    const double b = p.lambda * (1.0 + p.eta);
    auto pts = presample_shell(p, samples, seed, b * (1.0 + 1e-9), 3.0 * p.lambda);
    return sweep_max(p, pts, outer_deviation, mode, "outer", tol, false);
}

RegionReport verify_region_inner(const BlowupProfile& p, long samples, double tol,
                                 std::uint64_t seed, PullbackMode mode) {
    auto pts = presample_shell(p, samples, seed, 0.0, p.delta);
    return sweep_max(p, pts, inner_deviation, mode, "inner", tol, true);
}

RegionReport verify_region_inner_serial(const BlowupProfile& p, long samples, double tol,
                                        std::uint64_t seed, PullbackMode mode) {
    auto pts = presample_shell(p, samples, seed, 0.0, p.delta);
    return sweep_max(p, pts, inner_deviation, mode, "inner", tol, false);
}

RegionReport verify_positivity(const BlowupProfile& p, long samples, std::uint64_t seed) {
    return positivity_impl(p, samples, seed, true);
}

RegionReport verify_positivity_serial(const BlowupProfile& p, long samples, std::uint64_t seed) {
    return positivity_impl(p, samples, seed, false);
}

RegionReport verify_hopf(int n, long samples, double tol, std::uint64_t seed) {
    if (n < 2) throw Error(Error::Code::BadDimension, "complex dimension must be >= 2");
    Rng rng(seed);
    const Eigen::MatrixXd omega = omega_std_matrix(n);
    double max_dev = 0.0;
    for (long i = 0; i < samples; ++i) {
        Eigen::VectorXd z = random_direction(rng, 2 * n);
        auto tangent = [&]() {
            Eigen::VectorXd u = random_direction(rng, 2 * n);
            u -= u.dot(z) * z;
            return Eigen::VectorXd(u / u.norm());
        };
        Eigen::VectorXd u = tangent(), v = tangent();
        const double lhs = fs_pullback_form(z)(u, v);
        const double rhs = u.dot(omega * v);
        max_dev = std::max(max_dev, std::abs(lhs - rhs));
    }
    RegionReport r;
    r.region = "hopf";
    r.samples = samples;
    r.max_abs_deviation = max_dev;
    r.tol = tol;
    r.pass = max_dev <= tol;
    return r;
}

double fs_normalization(int resolution) { return fs_normalization_impl(resolution, true); }

double fs_normalization_serial(int resolution) { return fs_normalization_impl(resolution, false); }

RegionReport fs_normalization_report(int resolution, double tol) {
    RegionReport r;
    r.region = "normalization";
    r.samples = static_cast<long>(resolution) * resolution;
    r.value = fs_normalization(resolution);
    r.max_abs_deviation = std::abs(*r.value - kPi);
    r.tol = tol;
    r.pass = r.max_abs_deviation <= tol;
    return r;
}

} // namespace minperiod
