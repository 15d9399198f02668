#include "minperiod/bounds.hpp"

#include <cmath>

#include "minperiod/svp.hpp"

namespace minperiod {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_genus(int g, int min_g) {
    if (g < min_g)
        throw Error(Error::Code::GenusTooSmall,
                    "genus " + std::to_string(g) + " below minimum " + std::to_string(min_g));
}

void require_gonality(int d) {
    if (d < 2) throw Error(Error::Code::BadGonality, "gonality must be >= 2");
}

// (g!)^{1/g} in the log domain; relative error stays ~1e-15 up to g ~ 1e4.
double factorial_root(int g) { return std::exp(std::lgamma(static_cast<double>(g) + 1.0) / g); }

} // namespace

double seshadri_lower_from_period(double m_A) {
    if (!(m_A > 0)) throw Error(Error::Code::BadInput, "m(A) must be positive");
    return kPi * m_A / 4.0;
}

double ekl_upper(int g) {
    require_genus(g, 1);
    return factorial_root(g);
}

double bs1_lower(int g) {
    require_genus(g, 1);
    return std::exp((std::log(2.0) + std::lgamma(static_cast<double>(g) + 1.0)) / g) / kPi;
}

double corollary_lower(int g) {
    require_genus(g, 1);
    return std::exp((std::log(2.0) + std::lgamma(static_cast<double>(g) + 1.0)) / g) / 4.0;
}

double bs2_jacobian_upper(int g) {
    require_genus(g, 2);
    return 3.0 / kPi * std::log(4.0 * g + 3.0);
}

double jacobian_seshadri_upper(int g) {
    require_genus(g, 2);
    return std::sqrt(static_cast<double>(g));
}

Rational gonality_seshadri_upper(int g, int d) {
    require_genus(g, 2);
    require_gonality(d);
    return Rational(static_cast<std::int64_t>(g) * d, static_cast<std::int64_t>(g) + d - 1);
}

double gonality_period_upper(int d) {
    require_gonality(d);
    return 4.0 * d / kPi;
}

BoundsReport bounds_report(const std::optional<PeriodMatrix>& tau, int g,
                           std::optional<int> gonality, bool is_jacobian) {
    require_genus(g, 1);
    if (tau && tau->g != g)
        throw Error(Error::Code::BadInput, "genus does not match the period matrix");
    std::optional<double> m;
    if (tau) m = min_period_length(*tau);
    return detail::assemble_report(g, m, gonality, is_jacobian);
}

BoundsReport detail::assemble_report(int g, std::optional<double> m_A,
                                     std::optional<int> gonality, bool is_jacobian) {
    require_genus(g, 1);

    BoundsReport r;
    r.g = g;
    r.upper_ekl = ekl_upper(g);
    r.bs1_benchmark = bs1_lower(g);
    r.lower_corollary = corollary_lower(g);
    r.lower_nakamaye = 1.0;

    if (m_A) {
        r.m_A = m_A;
        r.lower_theorem = seshadri_lower_from_period(*r.m_A);
    }
    if (is_jacobian) {
        r.jacobian_upper_sqrt = jacobian_seshadri_upper(g);
        r.bs2_jacobian_upper = bs2_jacobian_upper(g);
    }
    if (gonality) {
        Rational exact = gonality_seshadri_upper(g, *gonality);
        r.gonality_upper_exact = exact;
        r.gonality_upper = exact.to_double();
        r.gonality_period_upper = minperiod::gonality_period_upper(*gonality);
    }

    // Only bounds valid for every p.p.a.v. of this genus enter the
    // effective lower bound; the corollary value holds for very general
    // ones only and stays informational.
    r.effective_lower = r.lower_nakamaye;
    if (r.lower_theorem) r.effective_lower = std::max(r.effective_lower, *r.lower_theorem);
    r.gap_to_ekl_upper = r.upper_ekl - r.effective_lower;

    const double slack = 1e-12;
    if (r.effective_lower > r.upper_ekl * (1.0 + slack))
        r.consistency_flags.push_back("EFFECTIVE_LOWER_EXCEEDS_EKL_UPPER");
    if (r.m_A) {
        if (is_jacobian && *r.lower_theorem > *r.jacobian_upper_sqrt * (1.0 + slack))
            r.consistency_flags.push_back("JACOBIAN_SQRT_CONTRADICTION");
        if (*r.m_A > 4.0 / kPi * r.upper_ekl * (1.0 + slack))
            r.consistency_flags.push_back("THEOREM_EKL_VIOLATION");
    }

    if (r.effective_lower == r.lower_nakamaye)
        r.notes.push_back("epsilon(A) = 1 exactly iff (A, Theta) splits off an elliptic curve;"
                          " the report never decides that");
    return r;
}

} // namespace minperiod
