#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minperiod/period_matrix.hpp"
#include "minperiod/rational.hpp"

namespace minperiod {

// Seshadri lower bound from the minimal period length: (pi/4) * m(A).
double seshadri_lower_from_period(double m_A);

// Upper bound for any g-dimensional p.p.a.v.: (g!)^{1/g}, log-domain.
double ekl_upper(int g);

// Existence benchmark for the minimal period length of the best p.p.a.v.
// at genus g: (1/pi) (2 g!)^{1/g}.
double bs1_lower(int g);

// Seshadri lower bound for a very general p.p.a.v.: (2^{1/g}/4) (g!)^{1/g}.
double corollary_lower(int g);

// Jacobian period upper bound (3/pi) log(4g+3), natural log, g >= 2.
double bs2_jacobian_upper(int g);

// Jacobian Seshadri upper bound sqrt(g), g >= 2.
double jacobian_seshadri_upper(int g);

// Seshadri upper bound g*d/(g+d-1) for a genus-g curve admitting a
// d-sheeted covering of P^1 (exact rational).
Rational gonality_seshadri_upper(int g, int d);

// Period upper bound 4d/pi for a d-gonal curve's Jacobian.
double gonality_period_upper(int d);

struct BoundsReport {
    int g = 0;
    std::optional<double> m_A;
    std::optional<double> lower_theorem;      // (pi/4) m(A)
    double lower_nakamaye = 1.0;              // holds for every p.p.a.v.
    double lower_corollary = 0.0;             // very general p.p.a.v. only
    double upper_ekl = 0.0;
    std::optional<double> jacobian_upper_sqrt;
    std::optional<double> gonality_upper;
    std::optional<Rational> gonality_upper_exact;
    double bs1_benchmark = 0.0;
    std::optional<double> bs2_jacobian_upper;
    std::optional<double> gonality_period_upper;
    double effective_lower = 1.0;             // max of bounds valid for the given input
    double gap_to_ekl_upper = 0.0;            // upper_ekl - effective_lower (open territory)
    std::vector<std::string> consistency_flags;
    std::vector<std::string> notes;
};

// Assembles every applicable bound for one input and raises consistency
// flags on contradictions:
//   EFFECTIVE_LOWER_EXCEEDS_EKL_UPPER    effective_lower > upper_ekl
//   JACOBIAN_SQRT_CONTRADICTION          is_jacobian and (pi/4) m > sqrt(g)
//   THEOREM_EKL_VIOLATION                m > (4/pi) (g!)^{1/g}
// Any flag indicates a bug or an invalid input, never a valid p.p.a.v.
// When tau is given, m(A) is computed (g is checked for consistency).
BoundsReport bounds_report(const std::optional<PeriodMatrix>& tau, int g,
                           std::optional<int> gonality, bool is_jacobian);

namespace detail {
// Assembly from an already-known m(A); lets tests drive the flag logic
// with values no valid period matrix can produce.
BoundsReport assemble_report(int g, std::optional<double> m_A, std::optional<int> gonality,
                             bool is_jacobian);
} // namespace detail

} // namespace minperiod
