#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minperiod/error.hpp"

namespace minperiod {

// Points of C^n are real 2n-vectors in interleaved coordinates
// (x_1, y_1, ..., x_n, y_n) with z_j = x_j + i y_j. The standard
// symplectic form sum dx_j ^ dy_j is then block-diagonal [[0,1],[-1,0]].

// Radial profile of the blow-up twist: phi(r) = sqrt(lambda^2 + r^2) for
// r <= delta, phi(r) = r for r >= lambda(1+eta), and a C^2 strictly
// increasing blend in between. The blend is built in derivative space:
// phi' is a cubic cap from the inner branch slope down to a solved
// constant floor, the floor itself, and a cubic cap up to slope 1; phi is
// its exact piecewise integral (quartic pieces). A single quintic Hermite
// segment is not monotone for the default parameters, so this
// construction replaces it; strict monotonicity is checked densely at
// build time and the form-positivity sweep is the final gate.
struct BlowupProfile {
    int n = 2;          // complex dimension
    double lambda = 1;  // ball radius being blown up
    double eta = 0.05;  // outer slack
    double delta = 0.1; // inner radius

    struct Piece {
        double lo = 0, width = 0;        // r in [lo, lo+width], t = (r-lo)/width
        std::array<double, 4> dcoef{};   // phi'(t) cubic coefficients
        double base = 0;                 // phi(lo)
    };
    std::vector<Piece> pieces;           // 3 blend pieces
    double min_blend_slope = 0;          // min of phi' over the blend (dense samples)

    // delta_opt < 0 selects the default delta = lambda/10. Requires
    // 0 < delta < lambda and sqrt(lambda^2+delta^2) < lambda(1+eta)
    // (otherwise no increasing blend exists and InfeasibleProfile is
    // thrown; the inner radius must shrink as eta does).
    static BlowupProfile make(int n, double lambda, double eta, double delta_opt = -1.0);
};

double phi(const BlowupProfile& p, double r);
double phi_prime(const BlowupProfile& p, double r);
double phi_second(const BlowupProfile& p, double r);

// F(z) = (phi(|z|)/|z|) z on C^n \ {0}. Throws ZeroInput at the origin.
Eigen::VectorXd map_F(const BlowupProfile& p, const Eigen::VectorXd& z);

// Real Jacobian of F at z: (phi/r) I + (phi' - phi/r) zhat zhat^T.
Eigen::MatrixXd map_F_jacobian(const BlowupProfile& p, const Eigen::VectorXd& z);

// Antisymmetric matrix of a 2-form at a base point.
struct TwoForm {
    Eigen::VectorXd base;
    Eigen::MatrixXd matrix;

    double operator()(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
        return u.dot(matrix * v);
    }
};

// Matrix of the standard form on R^{2n}.
Eigen::MatrixXd omega_std_matrix(int n);

// Matrix of the standard complex structure (multiplication by i).
Eigen::MatrixXd complex_structure_matrix(int n);

enum class PullbackMode { Analytic, FiniteDifference };

// (F* omega_std)_z as a matrix: entries omega(DF e_i, DF e_j). Analytic
// mode uses the closed-form Jacobian; finite-difference mode central
// differences with step h (default 1e-6 * max(1, |z|)).
TwoForm pullback_two_form(const BlowupProfile& p, const Eigen::VectorXd& z,
                          PullbackMode mode = PullbackMode::Analytic, double h = -1.0);

// Pullback to C^n \ {0} of the Fubini-Study form on P^{n-1} normalized so
// a line has area pi: the real matrix of
// (i/2) sum (delta_jk |z|^2 - conj(z_j) z_k) / |z|^4 dz_j ^ dconj(z_k).
// Degenerate exactly along the radial complex direction.
TwoForm fs_pullback_form(const Eigen::VectorXd& z);

// One verification sweep's outcome.
struct RegionReport {
    std::string region; // outer | inner | positivity | hopf | normalization
    long samples = 0;
    double max_abs_deviation = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::optional<double> min_eigenvalue; // positivity sweep only
    std::optional<double> value;          // normalization sweep: the integral
};

// (i) of the local construction: the pullback equals omega_std outside
// the ball of radius lambda(1+eta); sampled in the shell up to 3 lambda.
RegionReport verify_region_outer(const BlowupProfile& p, long samples, double tol,
                                 std::uint64_t seed, PullbackMode mode = PullbackMode::Analytic);
RegionReport verify_region_outer_serial(const BlowupProfile& p, long samples, double tol,
                                        std::uint64_t seed, PullbackMode mode = PullbackMode::Analytic);

// (ii): inside radius delta the pullback equals omega_std + lambda^2 q*sigma.
RegionReport verify_region_inner(const BlowupProfile& p, long samples, double tol,
                                 std::uint64_t seed, PullbackMode mode = PullbackMode::Analytic);
RegionReport verify_region_inner_serial(const BlowupProfile& p, long samples, double tol,
                                        std::uint64_t seed, PullbackMode mode = PullbackMode::Analytic);

// Positivity of the twisted form: at each sample the Hermitian matrix h
// with tau(u, Ju) = u^T h u must be positive definite. Samples stratified
// over inner, blend and outer regions; reports the global minimum
// eigenvalue. This is the acceptance gate for the blend construction.
RegionReport verify_positivity(const BlowupProfile& p, long samples, std::uint64_t seed);
RegionReport verify_positivity_serial(const BlowupProfile& p, long samples, std::uint64_t seed);

// Hopf compatibility kappa* sigma = omega_std | S: on the unit sphere the
// FS pullback agrees with the standard form on sphere-tangent vectors.
RegionReport verify_hopf(int n, long samples, double tol, std::uint64_t seed);

// Integral of sigma over a line in P^{n-1} by a midpoint product rule on
// the affine chart (order 2); the exact value is pi. The density is
// evaluated through fs_pullback_form, tying the normalization check to
// the same code path the region checks use.
double fs_normalization(int resolution);
double fs_normalization_serial(int resolution);

RegionReport fs_normalization_report(int resolution, double tol);

} // namespace minperiod
