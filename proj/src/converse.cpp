#include "germ/converse.hpp"

#include "germ/compose.hpp"
#include "germ/error.hpp"
#include "germ/interp.hpp"
#include "germ/singularity.hpp"

namespace germ {

VolumeForm VolumeForm::make(const PForm& w, int trunc) {
    if (w.is_null()) throw InvalidInputError("volume form is empty");
    if (w.form_degree() != w.ring()->nvars())
        throw InvalidInputError("volume form must have top degree");
    if (w.is_zero()) throw NotVolumeError();
    const Poly& u = w.terms().begin()->second;
    if (u.constant_term().is_zero()) throw NotVolumeError();
    return {w.truncated(trunc), trunc};
}

const Poly& VolumeForm::coeff() const { return form.terms().begin()->second; }

PForm primitive_difference(const VolumeForm& w, const VolumeForm& wp) {
    check_same_ring(w.ring(), wp.ring());
    if (w.trunc != wp.trunc)
        throw InvalidInputError("volume forms carry different truncations");
    PForm diff = w.form - wp.form;
    if (diff.is_zero()) return PForm::zero(w.ring(), w.ring()->nvars() - 1);
    return poincare_primitive(diff);
}

PForm transported_primitive(const FormalDiffeo& phi, const VolumeForm& eta, int N) {
    check_same_ring(phi.ring, eta.ring());
    VectorField v = log_diffeo(phi, N);  // throws when not tangent to identity
    TimeDiffeo flow = exp_field(v, N);
    PForm vol = contract(v, eta.form);
    TimePForm pulled = pullback(flow, vol, N);
    return time_integrate(pulled, Rational(0), Rational(1));
}

ConverseReport verify_converse(const Poly& f, const VolumeForm& omega,
                               const VolumeForm& omega_prime, const FormalDiffeo& phi,
                               int N) {
    check_same_ring(f.ring(), omega.ring());
    check_same_ring(f.ring(), omega_prime.ring());
    check_same_ring(f.ring(), phi.ring);
    if (!milnor_number(f)) throw NonIsolatedError();

    ConverseReport r;
    r.trunc = N;
    r.unit = validate_isotropy(phi, f, N);

    if (pullback(phi, omega_prime.form, N) != omega.form.truncated(N))
        throw NotEquivalentError();
    r.equivalence_residual_zero = true;

    r.alpha = primitive_difference(omega, omega_prime);
    r.alpha_hat = transported_primitive(phi, omega_prime, N);

    // d(alpha) = omega - omega' exactly and d(alpha_hat) matches it through
    // coefficient degree N-1, so the truncated gap is exactly closed and the
    // radial homotopy certifies exactness: alpha = alpha_hat + d(primitive).
    PForm gap = (r.alpha - r.alpha_hat).truncated(N);
    PForm dgap = exterior_derivative(gap);
    if (dgap.is_zero()) {
        PForm prim = poincare_primitive(gap);
        r.gap_exact = (exterior_derivative(prim) == gap);
    }

    ClassResult cls = givental_class_is_zero(f, r.alpha, N);
    r.class_zero = cls.zero;
    r.stabilized_at = cls.stabilized_at;
    return r;
}

}  // namespace germ
