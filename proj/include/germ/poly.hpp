#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/rational.hpp"
#include "germ/ring.hpp"

namespace germ {

// Sparse multivariate polynomial with exact rational coefficients, also used
// as a truncated power-series jet. Terms are kept in the canonical monomial
// order with no stored zeros, so iteration is deterministic and the order
// (minimal total degree) sits at begin().
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, CanonMonoLess>;

    Poly() = default;  // null polynomial, belongs to no ring
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, const Rational& c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_.emplace(Monomial(ring->nvars()), c);
        return p;
    }

    static Poly variable(RingPtr ring, int i) {
        if (i < 0 || i >= ring->nvars())
            throw InvalidInputError("variable index out of range");
        Monomial m(ring->nvars());
        m.e[i] = 1;
        Poly p(ring);
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Poly term(RingPtr ring, const Monomial& m, const Rational& c) {
        if (m.nvars() != ring->nvars())
            throw InvalidInputError("monomial arity does not match ring");
        Poly p(ring);
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    bool is_null() const { return ring_ == nullptr; }
    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_->nvars(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Minimal total degree of a term; nullopt for the zero polynomial (its
    // order is "infinite" and never enters arithmetic).
    std::optional<int> order() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.degree();
    }

    // Maximal total degree; nullopt for the zero polynomial.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.degree();
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Monomial(nvars())); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_same_ring(ring_, o.ring_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_same_ring(ring_, o.ring_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same_ring(a.ring_, b.ring_);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Poly operator*(const Rational& c, const Poly& p) { return scale(c, p); }

    static Poly scale(const Rational& c, const Poly& p) {
        Poly r(p.ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, a] : p.terms_) r.terms_.emplace(m, c * a);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // All terms of total degree > N removed.
    Poly truncated(int N) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.degree() > N) break;  // canonical order is degree-ascending
            r.terms_.emplace(m, c);
        }
        return r;
    }

    Poly homogeneous_part(int d) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            int md = m.degree();
            if (md > d) break;
            if (md == d) r.terms_.emplace(m, c);
        }
        return r;
    }

    // Exact formal partial derivative with respect to variable i.
    Poly partial(int i) const {
        if (i < 0 || i >= nvars())
            throw InvalidInputError("variable index out of range");
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.e[i] == 0) continue;
            Monomial d(m);
            d.e[i] -= 1;
            r.terms_.emplace(std::move(d), Rational(m.e[i]) * c);
        }
        return r;
    }

    std::string str() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

inline Poly mul_trunc(const Poly& a, const Poly& b, int N) {
    check_same_ring(a.ring(), b.ring());
    Poly r(a.ring());
    for (const auto& [ma, ca] : a.terms()) {
        int da = ma.degree();
        if (da > N) break;
        for (const auto& [mb, cb] : b.terms()) {
            if (da + mb.degree() > N) break;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

inline Poly pow_trunc(const Poly& p, int k, int N) {
    Poly r = Poly::constant(p.ring(), Rational(1));
    for (int i = 0; i < k; ++i) r = mul_trunc(r, p, N);
    return r;
}

inline Poly truncate(const Poly& p, int N) { return p.truncated(N); }
inline Poly partial_derivative(const Poly& p, int i) { return p.partial(i); }

std::string monomial_str(const Monomial& m, const RingSpec& ring);

}  // namespace germ
