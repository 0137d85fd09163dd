#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "germ/compose.hpp"
#include "germ/diffeo.hpp"
#include "germ/error.hpp"
#include "germ/poly.hpp"
#include "germ/timepoly.hpp"

namespace germ {

// Index tuples are strictly increasing lists of variable indices.
using IndexTuple = std::vector<int>;

// Differential p-form with coefficients in C (Poly or TimePoly). Terms are
// keyed by index tuple; zero coefficients are never stored.
template <class C>
class FormT {
  public:
    using TermMap = std::map<IndexTuple, C>;

    FormT() = default;

    static FormT zero(RingPtr ring, int p) {
        if (p < 0 || p > ring->nvars())
            throw InvalidInputError("form degree out of range");
        FormT w;
        w.ring_ = std::move(ring);
        w.p_ = p;
        return w;
    }

    // Builds coeff * dx_{idx}; idx may be unsorted, the sign of the sorting
    // permutation is absorbed into the coefficient. Repeated indices give 0.
    static FormT term(RingPtr ring, C coeff, IndexTuple idx) {
        for (int i : idx)
            if (i < 0 || i >= ring->nvars())
                throw InvalidInputError("form index out of range");
        int sign = 1;
        for (std::size_t a = 1; a < idx.size(); ++a) {
            std::size_t b = a;
            while (b > 0 && idx[b] < idx[b - 1]) {
                std::swap(idx[b], idx[b - 1]);
                sign = -sign;
                --b;
            }
        }
        for (std::size_t a = 1; a < idx.size(); ++a)
            if (idx[a] == idx[a - 1]) return zero(ring, static_cast<int>(idx.size()));
        FormT w = zero(ring, static_cast<int>(idx.size()));
        if (sign < 0) coeff = CoeffOps<C>::scale(Rational(-1), coeff);
        w.add_term(idx, coeff);
        return w;
    }

    RingPtr ring() const { return ring_; }
    int form_degree() const { return p_; }
    const TermMap& terms() const { return terms_; }
    bool is_null() const { return ring_ == nullptr; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const IndexTuple& idx) const {
        auto it = terms_.find(idx);
        if (it == terms_.end()) return CoeffOps<C>::constant(ring_, Rational(0));
        return it->second;
    }

    void add_term(const IndexTuple& idx, const C& coeff) {
        if (static_cast<int>(idx.size()) != p_)
            throw InvalidInputError("index tuple size does not match form degree");
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            if (!coeff_is_zero(coeff)) terms_.emplace(idx, coeff);
        } else {
            it->second += coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    FormT operator-() const {
        FormT w = *this;
        for (auto& [idx, c] : w.terms_) c = CoeffOps<C>::scale(Rational(-1), c);
        return w;
    }

    FormT& operator+=(const FormT& o) {
        require_compat(o);
        for (const auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    FormT& operator-=(const FormT& o) {
        require_compat(o);
        for (const auto& [idx, c] : o.terms_) add_term(idx, CoeffOps<C>::scale(Rational(-1), c));
        return *this;
    }
    friend FormT operator+(FormT a, const FormT& b) { return a += b; }
    friend FormT operator-(FormT a, const FormT& b) { return a -= b; }

    static FormT scale(const FormT& w, const Rational& r) {
        FormT out = zero(w.ring_, w.p_);
        if (r.is_zero()) return out;
        for (const auto& [idx, c] : w.terms_) out.terms_.emplace(idx, CoeffOps<C>::scale(r, c));
        return out;
    }

    // Coefficient-wise truncation at total x-degree N.
    FormT truncated(int N) const {
        FormT out = zero(ring_, p_);
        for (const auto& [idx, c] : terms_) {
            C t = trunc_coeff(c, N);
            if (!coeff_is_zero(t)) out.terms_.emplace(idx, t);
        }
        return out;
    }

    bool operator==(const FormT& o) const {
        return same_ring(ring_, o.ring_) && p_ == o.p_ && terms_ == o.terms_;
    }
    bool operator!=(const FormT& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            bool lead = true;
            for (int i : idx) {
                os << (lead ? " d" : "^d") << ring_->var_name(i);
                lead = false;
            }
        }
        return os.str();
    }

  private:
    void require_compat(const FormT& o) const {
        check_same_ring(ring_, o.ring_);
        if (p_ != o.p_) throw InvalidInputError("form degrees differ");
    }
    static bool coeff_is_zero(const C& c) { return !CoeffOps<C>::order(c).has_value(); }
    static C trunc_coeff(const C& c, int N);

    RingPtr ring_;
    int p_ = 0;
    TermMap terms_;
};

template <>
inline Poly FormT<Poly>::trunc_coeff(const Poly& c, int N) { return c.truncated(N); }
template <>
inline TimePoly FormT<TimePoly>::trunc_coeff(const TimePoly& c, int N) { return c.truncated_x(N); }

using PForm = FormT<Poly>;
using TimePForm = FormT<TimePoly>;

// Sign of merging two strictly increasing tuples, or 0 if they intersect.
// Counts transpositions needed to interleave b into a.
inline int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

// Exact wedge; degrees beyond the variable count collapse to the zero
// top-form. Coefficient truncation is the caller's business.
template <class C>
FormT<C> wedge(const FormT<C>& a, const FormT<C>& b) {
    check_same_ring(a.ring(), b.ring());
    int p = a.form_degree() + b.form_degree();
    if (p > a.ring()->nvars()) return FormT<C>::zero(a.ring(), a.ring()->nvars());
    FormT<C> out = FormT<C>::zero(a.ring(), p);
    IndexTuple merged;
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            int s = merge_sign(ia, ib, merged);
            if (s == 0) continue;
            C prod = CoeffOps<C>::mul(ca, cb);
            if (s < 0) prod = CoeffOps<C>::scale(Rational(-1), prod);
            out.add_term(merged, prod);
        }
    }
    return out;
}

// Exterior derivative, exact in the coefficients (no truncation; degree of
// every coefficient drops by one).
template <class C>
FormT<C> exterior_derivative(const FormT<C>& w) {
    if (w.form_degree() == w.ring()->nvars())
        return FormT<C>::zero(w.ring(), w.ring()->nvars());
    FormT<C> out = FormT<C>::zero(w.ring(), w.form_degree() + 1);
    IndexTuple merged;
    for (const auto& [idx, c] : w.terms()) {
        for (int i = 0; i < w.ring()->nvars(); ++i) {
            C dc = c.partial(i);
            if (!CoeffOps<C>::order(dc)) continue;
            IndexTuple one{i};
            int s = merge_sign(one, idx, merged);
            if (s == 0) continue;
            if (s < 0) dc = CoeffOps<C>::scale(Rational(-1), dc);
            out.add_term(merged, dc);
        }
    }
    return out;
}

// Interior product with a polynomial vector field; exact.
template <class C>
FormT<C> contract(const VectorField& v, const FormT<C>& w) {
    check_same_ring(v.ring, w.ring());
    if (w.form_degree() == 0) throw InvalidInputError("interior product of a 0-form");
    FormT<C> out = FormT<C>::zero(w.ring(), w.form_degree() - 1);
    for (const auto& [idx, c] : w.terms()) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Poly& vj = v.comp[idx[j]];
            if (vj.is_zero()) continue;
            C prod = CoeffOps<C>::mul(C(vj), c);
            if (j % 2 == 1) prod = CoeffOps<C>::scale(Rational(-1), prod);
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            out.add_term(rest, prod);
        }
    }
    return out;
}

// Pullback along a formal map germ, all coefficient products truncated at N.
PForm pullback(const FormalDiffeo& phi, const PForm& w, int N);
TimePForm pullback(const TimeDiffeo& phi, const PForm& w, int N);

// Primitive of a closed p-form (p >= 1) via the radial homotopy: each
// coefficient-homogeneous piece eta_k of coefficient degree k contributes
// contract(E, eta_k)/(k+p) with E the Euler field. Exact; throws
// NotClosedError when d(w) != 0.
PForm poincare_primitive(const PForm& w);

// Slice and calculus in the time direction.
PForm eval_t(const TimePForm& w, const Rational& t);
TimePForm dt(const TimePForm& w);
PForm time_integrate(const TimePForm& w, const Rational& from, const Rational& to);

}  // namespace germ
