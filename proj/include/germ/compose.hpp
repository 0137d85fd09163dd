#pragma once

#include <vector>

#include "germ/poly.hpp"
#include "germ/timepoly.hpp"

namespace germ {

// Uniform coefficient-ring operations so that substitution works for both
// static (Poly) and time-dependent (TimePoly) component lists.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Poly> {
    static Poly constant(const RingPtr& r, const Rational& c) { return Poly::constant(r, c); }
    static Poly mul(const Poly& a, const Poly& b) { return a * b; }
    static Poly mul_trunc(const Poly& a, const Poly& b, int N) { return germ::mul_trunc(a, b, N); }
    static Poly scale(const Rational& c, const Poly& p) { return Poly::scale(c, p); }
    static std::optional<int> order(const Poly& p) { return p.order(); }
};

template <>
struct CoeffOps<TimePoly> {
    static TimePoly constant(const RingPtr& r, const Rational& c) {
        return TimePoly(Poly::constant(r, c));
    }
    static TimePoly mul(const TimePoly& a, const TimePoly& b) { return a * b; }
    static TimePoly mul_trunc(const TimePoly& a, const TimePoly& b, int N) {
        return germ::mul_trunc(a, b, N);
    }
    static TimePoly scale(const Rational& c, const TimePoly& p) { return TimePoly::scale(c, p); }
    static std::optional<int> order(const TimePoly& p) { return p.order_x(); }
};

// Substitute components for the variables of p, truncating every product to
// total degree N in the ring variables. Components must vanish at the origin
// so that the substitution is a well-defined operation on jets.
template <class C>
C substitute(const Poly& p, const std::vector<C>& comps, int N) {
    using Ops = CoeffOps<C>;
    const RingPtr& ring = p.ring();
    if (static_cast<int>(comps.size()) != ring->nvars())
        throw InvalidInputError("component count does not match ring");
    std::vector<int> comp_order(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        check_same_ring(ring, comps[i].ring());
        auto o = Ops::order(comps[i]);
        if (o && *o < 1)
            throw InvalidInputError("substitution component with nonzero constant term");
        comp_order[i] = o ? *o : N + 1;  // zero component: any positive power kills the term
    }

    // Lazily cached powers of each component, truncated at N.
    std::vector<std::vector<C>> powers(comps.size());
    auto power = [&](std::size_t i, int k) -> const C& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Ops::constant(ring, Rational(1)));
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(Ops::mul_trunc(cache.back(), comps[i], N));
        return cache[k];
    };

    C acc = Ops::constant(ring, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        long min_deg = 0;
        for (int i = 0; i < m.nvars(); ++i) min_deg += static_cast<long>(m.e[i]) * comp_order[i];
        if (min_deg > N) continue;
        C prod = Ops::constant(ring, c);
        for (int i = 0; i < m.nvars(); ++i)
            if (m.e[i] > 0) prod = Ops::mul_trunc(prod, power(i, m.e[i]), N);
        acc += prod;
    }
    return acc;
}

inline Poly compose(const Poly& p, const std::vector<Poly>& comps, int N) {
    return substitute<Poly>(p, comps, N);
}

inline TimePoly compose(const Poly& p, const std::vector<TimePoly>& comps, int N) {
    return substitute<TimePoly>(p, comps, N);
}

}  // namespace germ
