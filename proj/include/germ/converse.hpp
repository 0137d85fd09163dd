#pragma once

#include "germ/cohomology.hpp"
#include "germ/diffeo.hpp"
#include "germ/forms.hpp"
#include "germ/poly.hpp"

namespace germ {

// Top-degree form whose coefficient is a unit (nonzero at the origin).
struct VolumeForm {
    PForm form;
    int trunc = 0;

    static VolumeForm make(const PForm& w, int trunc);
    const Poly& coeff() const;
    RingPtr ring() const { return form.ring(); }
};

// Radial primitive of w - wp; top-degree differences are always closed, so
// d(result) = w - wp exactly.
PForm primitive_difference(const VolumeForm& w, const VolumeForm& wp);

// alpha_hat = integral over t in [0,1] of pullback(Phi_t, v . eta) with
// v = log(phi) and Phi_t = exp_field(v). Satisfies
//   d(alpha_hat) = pullback(phi, eta) - eta
// through coefficient degree N-1.
PForm transported_primitive(const FormalDiffeo& phi, const VolumeForm& eta, int N);

struct ConverseReport {
    bool equivalence_residual_zero = false;
    PForm alpha;
    PForm alpha_hat;
    bool gap_exact = false;  // alpha - alpha_hat closed and exact at truncation
    bool class_zero = false;
    int stabilized_at = 0;
    int trunc = 0;
    Poly unit;  // g with compose(f, phi) = g * f
};

// Full pipeline: checks pullback(phi, omega_prime, N) = omega at truncation,
// builds alpha with d(alpha) = omega - omega_prime, the flow-transported
// alpha_hat with the same differential, certifies alpha - alpha_hat exact via
// the radial homotopy, and decides the class of alpha at the stabilized
// cohomological truncation.
ConverseReport verify_converse(const Poly& f, const VolumeForm& omega,
                               const VolumeForm& omega_prime, const FormalDiffeo& phi,
                               int N);

}  // namespace germ
