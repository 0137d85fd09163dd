#pragma once

#include "germ/diffeo.hpp"
#include "germ/poly.hpp"
#include "germ/timepoly.hpp"

namespace germ {

// Solves compose(f, phi, N) = g * f for the unit g, degree by degree;
// g is determined up to degree N - order(f) and g(0) = 1.
// Throws NotTangentToIdentityError / NotIsotropyError.
Poly validate_isotropy(const FormalDiffeo& phi, const Poly& f, int N);

// Embeds phi into a family Phi_t with polynomial-in-t coefficients solving
// the autonomous equation Phi_t' = Phi_0' o Phi_t with Phi_0 = id and
// Phi_1 = phi, working degree by degree in x.
TimeDiffeo interpolate(const FormalDiffeo& phi, int N);

// The unique field v with components of order >= 2 and exp(v) = phi up to
// degree N.
VectorField log_diffeo(const FormalDiffeo& phi, int N);

// Flow of v as a TimeDiffeo: component i carries sum_k t^k/k! v^k(x_i).
// Requires every component of v to have order >= 2.
TimeDiffeo exp_field(const VectorField& v, int N);

struct UnitFamily {
    TimePoly g;
    int trunc = 0;
};

// Unit family g_t with compose(f, Phi_t, N) = g_t * f identically in t.
// Throws NotIsotropyFamilyError when some t-coefficient has no solution.
UnitFamily interpolate_unit(const TimeDiffeo& phi_t, const Poly& f, int N);

}  // namespace germ
