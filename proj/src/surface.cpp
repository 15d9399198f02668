#include "minperiod/surface.hpp"

#include <cmath>

namespace minperiod {

namespace {

void require_genus(int g, int min_g = 2) {
    if (g < min_g)
        throw Error(Error::Code::GenusTooSmall,
                    "genus " + std::to_string(g) + " below minimum " + std::to_string(min_g));
}

} // namespace

PairingMatrix pairing_matrix(int g) {
    require_genus(g);
    PairingMatrix p;
    p.g = g;
    p.m = {{{0, 1, 1}, {1, 0, 1}, {1, 1, 2 - 2 * static_cast<std::int64_t>(g)}}};
    return p;
}

Rational intersect(const DivisorClass& d1, const DivisorClass& d2) {
    if (d1.g != d2.g)
        throw Error(Error::Code::GenusMismatch, "divisor classes live on different surfaces");
    PairingMatrix p = pairing_matrix(d1.g);
    const std::array<Rational, 3> u = {d1.a, d1.b, d1.c};
    const std::array<Rational, 3> v = {d2.a, d2.b, d2.c};
    Rational out(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += u[i] * Rational(p.m[i][j]) * v[j];
    return out;
}

DivisorClass pullback_theta(int g) {
    require_genus(g);
    return DivisorClass{g, Rational(g - 1), Rational(g - 1), Rational(1)};
}

std::int64_t sigma_degree(int g) {
    DivisorClass theta = pullback_theta(g);
    Rational deg = intersect(theta, theta);
    // (s* Theta)^2 is an integer by construction.
    if (!deg.is_integer())
        throw Error(Error::Code::NumericalBreakdown, "non-integral self-intersection");
    return deg.num;
}

double seshadri_upper_from_surface(const Rational& deg, std::int64_t mult) {
    if (mult < 1) throw Error(Error::Code::BadMultiplicity, "multiplicity must be >= 1");
    if (!(deg > Rational(0))) throw Error(Error::Code::BadInput, "degree must be positive");
    return std::sqrt((deg / Rational(mult)).to_double());
}

DivisorClass gamma_class(int g, int d) {
    require_genus(g);
    if (d < 2) throw Error(Error::Code::BadGonality, "gonality must be >= 2");
    return DivisorClass{g, Rational(d), Rational(d), Rational(-1)};
}

Rational nef_threshold_gonality(int g, int d) {
    DivisorClass gamma = gamma_class(g, d);
    DivisorClass theta = pullback_theta(g);
    DivisorClass diag{g, Rational(0), Rational(0), Rational(1)};
    // Gamma . (theta - eps*diag) = 0 is linear in eps.
    Rational constant = intersect(gamma, theta);
    Rational slope = intersect(gamma, diag);
    if (slope.is_zero())
        throw Error(Error::Code::DegenerateLinear, "nef threshold equation is degenerate");
    return constant / slope;
}

} // namespace minperiod
