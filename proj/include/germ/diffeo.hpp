#pragma once

#include <vector>

#include "germ/compose.hpp"
#include "germ/poly.hpp"
#include "germ/timepoly.hpp"

namespace germ {

// Formal vector field at the origin; components are polynomial jets. Fields
// that generate flows tangent to the identity have every component of order
// at least 2.
struct VectorField {
    RingPtr ring;
    std::vector<Poly> comp;

    static VectorField zero(RingPtr r) {
        VectorField v{r, std::vector<Poly>(r->nvars(), Poly::zero(r))};
        return v;
    }

    bool order_at_least(int k) const {
        for (const auto& p : comp) {
            auto o = p.order();
            if (o && *o < k) return false;
        }
        return true;
    }

    // Derivation applied to a function: sum of comp[i] * d(p)/dx_i.
    Poly apply(const Poly& p, int N) const {
        Poly r = Poly::zero(ring);
        for (std::size_t i = 0; i < comp.size(); ++i)
            r += mul_trunc(comp[i], p.partial(static_cast<int>(i)), N);
        return r;
    }
};

inline VectorField euler_field(const RingPtr& ring) {
    VectorField v{ring, {}};
    for (int i = 0; i < ring->nvars(); ++i) v.comp.push_back(Poly::variable(ring, i));
    return v;
}

// Map germ fixing the origin, given by one polynomial jet per coordinate,
// valid through total degree `trunc`.
struct FormalDiffeo {
    RingPtr ring;
    std::vector<Poly> comp;
    int trunc = 0;

    static FormalDiffeo identity(RingPtr r, int N) {
        FormalDiffeo d{r, {}, N};
        for (int i = 0; i < r->nvars(); ++i) d.comp.push_back(Poly::variable(r, i));
        return d;
    }

    bool fixes_origin() const {
        for (const auto& p : comp)
            if (!p.constant_term().is_zero()) return false;
        return true;
    }

    // Component i equals x_i plus terms of order >= 2.
    bool tangent_to_identity() const {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            Poly rest = comp[i] - Poly::variable(ring, static_cast<int>(i));
            auto o = rest.order();
            if (o && *o < 2) return false;
        }
        return true;
    }
};

// One-parameter family of map germs with polynomial-in-t coefficients.
struct TimeDiffeo {
    RingPtr ring;
    std::vector<TimePoly> comp;
    int trunc = 0;

    static TimeDiffeo identity(RingPtr r, int N) {
        TimeDiffeo d{r, {}, N};
        for (int i = 0; i < r->nvars(); ++i)
            d.comp.push_back(TimePoly(Poly::variable(r, i)));
        return d;
    }

    FormalDiffeo at(const Rational& t) const {
        FormalDiffeo d{ring, {}, trunc};
        for (const auto& c : comp) d.comp.push_back(c.eval(t));
        return d;
    }

    // Identity at t = 0 and every time-dependent part of order >= 2.
    bool tangent_to_identity() const {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (comp[i].coeff_t(0) != Poly::variable(ring, static_cast<int>(i))) return false;
            for (const auto& [k, p] : comp[i].coeffs()) {
                if (k == 0) continue;
                auto o = p.order();
                if (o && *o < 2) return false;
            }
        }
        return true;
    }
};

// Composition outer(inner(x)), truncated to total degree N.
inline FormalDiffeo compose(const FormalDiffeo& outer, const FormalDiffeo& inner, int N) {
    check_same_ring(outer.ring, inner.ring);
    FormalDiffeo r{outer.ring, {}, N};
    for (const auto& c : outer.comp) r.comp.push_back(compose(c, inner.comp, N));
    return r;
}

}  // namespace germ
