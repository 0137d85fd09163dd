#pragma once

#include <map>
#include <optional>
#include <string>

#include "germ/poly.hpp"

namespace germ {

// Polynomial in the distinguished time parameter t whose coefficients are
// polynomials in the ring variables. Used for flows and interpolations whose
// x-monomial coefficients are polynomials in t.
class TimePoly {
public:
    TimePoly() = default;
    explicit TimePoly(RingPtr ring) : ring_(std::move(ring)) {}
    TimePoly(const Poly& p) : ring_(p.ring()) {  // t-degree 0 embedding
        if (!p.is_zero()) c_.emplace(0, p);
    }

    static TimePoly t_term(const Poly& p, int k) {
        TimePoly q(p.ring());
        if (!p.is_zero()) q.c_.emplace(k, p);
        return q;
    }

    bool is_null() const { return ring_ == nullptr; }
    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<int, Poly>& coeffs() const { return c_; }

    int tdegree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Poly coeff_t(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Poly::zero(ring_) : it->second;
    }

    // Minimal x-order over all t-coefficients; nullopt when zero.
    std::optional<int> order_x() const {
        std::optional<int> r;
        for (const auto& [k, p] : c_) {
            auto o = p.order();
            if (o && (!r || *o < *r)) r = o;
        }
        return r;
    }

    std::optional<int> degree_x() const {
        std::optional<int> r;
        for (const auto& [k, p] : c_) {
            auto d = p.degree();
            if (d && (!r || *d > *r)) r = d;
        }
        return r;
    }

    void add_t_term(int k, const Poly& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = c_.emplace(k, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    TimePoly operator-() const {
        TimePoly r(ring_);
        for (const auto& [k, p] : c_) r.c_.emplace(k, -p);
        return r;
    }

    TimePoly& operator+=(const TimePoly& o) {
        check_same_ring(ring_, o.ring_);
        for (const auto& [k, p] : o.c_) add_t_term(k, p);
        return *this;
    }
    TimePoly& operator-=(const TimePoly& o) {
        check_same_ring(ring_, o.ring_);
        for (const auto& [k, p] : o.c_) add_t_term(k, -p);
        return *this;
    }

    friend TimePoly operator+(TimePoly a, const TimePoly& b) { return a += b; }
    friend TimePoly operator-(TimePoly a, const TimePoly& b) { return a -= b; }

    friend TimePoly operator*(const TimePoly& a, const TimePoly& b) {
        check_same_ring(a.ring_, b.ring_);
        TimePoly r(a.ring_);
        for (const auto& [ka, pa] : a.c_)
            for (const auto& [kb, pb] : b.c_) r.add_t_term(ka + kb, pa * pb);
        return r;
    }

    friend TimePoly operator*(const Poly& p, const TimePoly& q) {
        return TimePoly(p) * q;
    }

    static TimePoly scale(const Rational& c, const TimePoly& q) {
        TimePoly r(q.ring_);
        if (c.is_zero()) return r;
        for (const auto& [k, p] : q.c_) r.c_.emplace(k, Poly::scale(c, p));
        return r;
    }

    friend bool operator==(const TimePoly& a, const TimePoly& b) {
        return same_ring(a.ring_, b.ring_) && a.c_ == b.c_;
    }
    friend bool operator!=(const TimePoly& a, const TimePoly& b) { return !(a == b); }

    // Truncation in the ring variables only; t-degrees are never truncated
    // (they stay finite on their own for origin-preserving substitutions).
    TimePoly truncated_x(int N) const {
        TimePoly r(ring_);
        for (const auto& [k, p] : c_) r.add_t_term(k, p.truncated(N));
        return r;
    }

    TimePoly partial(int i) const {
        TimePoly r(ring_);
        for (const auto& [k, p] : c_) r.add_t_term(k, p.partial(i));
        return r;
    }

    TimePoly dt() const {
        TimePoly r(ring_);
        for (const auto& [k, p] : c_)
            if (k > 0) r.add_t_term(k - 1, Poly::scale(Rational(k), p));
        return r;
    }

    Poly eval(const Rational& t) const {
        Poly r = Poly::zero(ring_);
        Rational tk(1);
        int last = 0;
        for (const auto& [k, p] : c_) {
            for (; last < k; ++last) tk *= t;
            r += Poly::scale(tk, p);
        }
        return r;
    }

    // Exact definite integral in t: each t^k contributes
    // (to^{k+1} - from^{k+1}) / (k+1).
    Poly integrate_t(const Rational& from, const Rational& to) const {
        Poly r = Poly::zero(ring_);
        for (const auto& [k, p] : c_) {
            Rational hi(1), lo(1);
            for (int i = 0; i <= k; ++i) {
                hi *= to;
                lo *= from;
            }
            r += Poly::scale((hi - lo) / Rational(k + 1), p);
        }
        return r;
    }

    std::string str() const {
        if (is_null()) return "<null>";
        if (c_.empty()) return "0";
        std::string s;
        for (const auto& [k, p] : c_) {
            if (!s.empty()) s += " + ";
            s += "(" + p.str() + ")";
            if (k == 1) s += "*t";
            if (k > 1) s += "*t^" + std::to_string(k);
        }
        return s;
    }

private:
    RingPtr ring_;
    std::map<int, Poly> c_;
};

inline TimePoly mul_trunc(const TimePoly& a, const TimePoly& b, int N) {
    check_same_ring(a.ring(), b.ring());
    TimePoly r(a.ring());
    for (const auto& [ka, pa] : a.coeffs())
        for (const auto& [kb, pb] : b.coeffs())
            r.add_t_term(ka + kb, mul_trunc(pa, pb, N));
    return r;
}

inline Poly time_integrate(const TimePoly& q, const Rational& from, const Rational& to) {
    return q.integrate_t(from, to);
}

}  // namespace germ
