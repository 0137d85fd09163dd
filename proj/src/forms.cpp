#include "germ/forms.hpp"

namespace germ {

namespace {

// Common pullback body: substitute into each coefficient, then wedge the
// differentials of the map components. D supplies the component list; its
// coefficient type C is Poly for a fixed map and TimePoly for a family.
template <class C, class D>
FormT<C> pullback_impl(const D& phi, const PForm& w, int N) {
    check_same_ring(phi.ring, w.ring());
    if (static_cast<int>(phi.comp.size()) != phi.ring->nvars())
        throw InvalidInputError("map has wrong number of components");

    const int p = w.form_degree();
    FormT<C> out = FormT<C>::zero(w.ring(), p);
    if (w.is_zero()) return out;

    // d(phi_i) as 1-forms; partials are exact on the stored jets.
    std::vector<FormT<C>> dphi;
    dphi.reserve(phi.comp.size());
    for (const auto& comp : phi.comp) {
        FormT<C> df = FormT<C>::zero(w.ring(), 1);
        for (int j = 0; j < w.ring()->nvars(); ++j) {
            C pj = comp.partial(j);
            if (CoeffOps<C>::order(pj)) df.add_term({j}, pj);
        }
        dphi.push_back(std::move(df));
    }

    for (const auto& [idx, c] : w.terms()) {
        C pulled = substitute(c, phi.comp, N);
        if (!CoeffOps<C>::order(pulled)) continue;
        if (p == 0) {
            out.add_term({}, pulled);
            continue;
        }
        FormT<C> part = dphi[idx[0]];
        for (std::size_t k = 1; k < idx.size(); ++k)
            part = wedge(part, dphi[idx[k]]).truncated(N);
        for (const auto& [jdx, cj] : part.terms())
            out.add_term(jdx, CoeffOps<C>::mul_trunc(pulled, cj, N));
    }
    return out.truncated(N);
}

}  // namespace

PForm pullback(const FormalDiffeo& phi, const PForm& w, int N) {
    return pullback_impl<Poly>(phi, w, N);
}

TimePForm pullback(const TimeDiffeo& phi, const PForm& w, int N) {
    return pullback_impl<TimePoly>(phi, w, N);
}

PForm poincare_primitive(const PForm& w) {
    const int p = w.form_degree();
    if (p < 1) throw InvalidInputError("primitive requires form degree >= 1");
    if (!exterior_derivative(w).is_zero()) throw NotClosedError();

    PForm out = PForm::zero(w.ring(), p - 1);
    for (const auto& [idx, c] : w.terms()) {
        for (const auto& [m, a] : c.terms()) {
            const int k = m.degree();
            const Rational weight = a / Rational(k + p);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                Monomial shifted = m;
                shifted.e[idx[j]] += 1;
                IndexTuple rest;
                rest.reserve(idx.size() - 1);
                for (std::size_t q = 0; q < idx.size(); ++q)
                    if (q != j) rest.push_back(idx[q]);
                Rational coeff = (j % 2 == 0) ? weight : -weight;
                out.add_term(rest, Poly::term(w.ring(), shifted, coeff));
            }
        }
    }
    return out;
}

PForm eval_t(const TimePForm& w, const Rational& t) {
    PForm out = PForm::zero(w.ring(), w.form_degree());
    for (const auto& [idx, c] : w.terms()) {
        Poly v = c.eval(t);
        if (!v.is_zero()) out.add_term(idx, v);
    }
    return out;
}

TimePForm dt(const TimePForm& w) {
    TimePForm out = TimePForm::zero(w.ring(), w.form_degree());
    for (const auto& [idx, c] : w.terms()) {
        TimePoly v = c.dt();
        if (!v.is_zero()) out.add_term(idx, v);
    }
    return out;
}

PForm time_integrate(const TimePForm& w, const Rational& from, const Rational& to) {
    PForm out = PForm::zero(w.ring(), w.form_degree());
    for (const auto& [idx, c] : w.terms()) {
        Poly v = c.integrate_t(from, to);
        if (!v.is_zero()) out.add_term(idx, v);
    }
    return out;
}

}  // namespace germ
