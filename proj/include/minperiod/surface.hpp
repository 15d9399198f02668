#pragma once

#include <array>
#include <cstdint>

#include "minperiod/rational.hpp"

namespace minperiod {

// Numerical-equivalence class a*F1 + b*F2 + c*Delta on C x C, where F1, F2
// are fibers of the two projections and Delta is the diagonal; g is the
// genus of C. All arithmetic in this module is exact rational.
struct DivisorClass {
    int g = 0;
    Rational a, b, c;
};

// Intersection pairing in the basis (F1, F2, Delta):
//   F1.F2 = 1, F1^2 = F2^2 = 0, Delta.Fi = 1, Delta^2 = 2 - 2g.
struct PairingMatrix {
    int g = 0;
    std::array<std::array<std::int64_t, 3>, 3> m;
};

PairingMatrix pairing_matrix(int g);

// D1 . D2, exact. Throws GenusMismatch when the classes live on different
// surfaces.
Rational intersect(const DivisorClass& d1, const DivisorClass& d2);

// Class of the pullback of the theta divisor under the subtraction map
// s : C x C -> J(C): (g-1)(F1 + F2) + Delta.
DivisorClass pullback_theta(int g);

// Theta-degree of the difference surface Sigma = s(C x C):
// (s* Theta)^2 = 2g(g-1), exact.
std::int64_t sigma_degree(int g);

// Seshadri upper bound sqrt(deg / mult) for a subvariety of theta-degree
// `deg` through a point of multiplicity `mult`.
double seshadri_upper_from_surface(const Rational& deg, std::int64_t mult);

// Class d(F1 + F2) - Delta of the correspondence curve attached to a
// d-sheeted covering C -> P^1.
DivisorClass gamma_class(int g, int d);

// Root of Gamma . (s*Theta - eps Delta) = 0 in eps, solved symbolically;
// equals g*d/(g+d-1) exactly.
Rational nef_threshold_gonality(int g, int d);

} // namespace minperiod
