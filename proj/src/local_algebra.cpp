#include "germ/local_algebra.hpp"

#include <algorithm>
#include <deque>

#include "germ/error.hpp"

namespace germ {

std::pair<Monomial, Rational> leading_term(const Poly& p, const LocalOrdering& ord) {
    if (p.is_zero()) throw InvalidInputError("leading term of zero polynomial");
    // Terms are stored degree-ascending, so the minimal-degree block is at
    // the front; scan it for the ordering's maximum.
    auto it = p.terms().begin();
    int d = it->first.degree();
    auto best = it;
    for (++it; it != p.terms().end() && it->first.degree() == d; ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Monomial leading_monomial(const Poly& p, const LocalOrdering& ord) {
    return leading_term(p, ord).first;
}

int ecart(const Poly& p, const LocalOrdering& ord) {
    if (p.is_zero()) return 0;
    return *p.degree() - leading_monomial(p, ord).degree();
}

namespace {

// h - (lc_h/lc_t) * (lm_h/lm_t) * t, cancelling the leading term of h.
Poly cancel_lead(const Poly& h, const Monomial& lm_h, const Rational& lc_h, const Poly& t,
                 const Monomial& lm_t, const Rational& lc_t) {
    Monomial q = lm_h / lm_t;
    Rational c = lc_h / lc_t;
    return h - Poly::term(h.ring(), q, c) * t;
}

}  // namespace

Poly mora_reduce(const Poly& f, const std::vector<Poly>& gens, const LocalOrdering& ord) {
    struct Reducer {
        Monomial lm;
        Rational lc;
        int ec;
        Poly p;
    };
    std::vector<Reducer> pool;
    pool.reserve(gens.size());
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        auto [lm, lc] = leading_term(g, ord);
        pool.push_back({lm, lc, *g.degree() - lm.degree(), g});
    }

    Poly h = f;
    while (!h.is_zero()) {
        auto [lm_h, lc_h] = leading_term(h, ord);
        int ec_h = *h.degree() - lm_h.degree();
        int best = -1;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!pool[i].lm.divides(lm_h)) continue;
            if (best < 0 || pool[i].ec < pool[best].ec) best = static_cast<int>(i);
        }
        if (best < 0) break;
        // shelve first: push_back may reallocate, so borrow the reducer after
        if (pool[best].ec > ec_h) pool.push_back({lm_h, lc_h, ec_h, h});
        const Reducer& t = pool[best];
        h = cancel_lead(h, lm_h, lc_h, t.p, t.lm, t.lc);
    }
    return h;
}

namespace {

Poly monic(const Poly& p, const LocalOrdering& ord) {
    Rational lc = leading_term(p, ord).second;
    return Poly::scale(Rational(1) / lc, p);
}

}  // namespace

std::vector<Poly> standard_basis(const std::vector<Poly>& gens, const LocalOrdering& ord) {
    std::vector<Poly> g;
    for (const Poly& p : gens)
        if (!p.is_zero()) g.push_back(monic(p, ord));
    if (g.empty()) return g;

    struct Pair {
        std::size_t i, j;
        Monomial l;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.l.degree() != b.l.degree()) return a.l.degree() < b.l.degree();
        if (a.l != b.l) return ord.greater(a.l, b.l);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::deque<Pair> queue;
    auto push_pairs = [&](std::size_t k) {
        Monomial lk = leading_monomial(g[k], ord);
        for (std::size_t i = 0; i < k; ++i) {
            Monomial li = leading_monomial(g[i], ord);
            Monomial l = lcm(li, lk);
            if (l == li * lk) continue;  // coprime leads reduce to zero
            queue.push_back({i, k, l});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t k = 0; k < g.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.pop_front();
        const Poly &a = g[pr.i], &b = g[pr.j];
        Monomial la = leading_monomial(a, ord), lb = leading_monomial(b, ord);
        Poly s = Poly::term(a.ring(), pr.l / la, Rational(1)) * a -
                 Poly::term(b.ring(), pr.l / lb, Rational(1)) * b;
        Poly h = mora_reduce(s, g, ord);
        if (h.is_zero()) continue;
        g.push_back(monic(h, ord));
        push_pairs(g.size() - 1);
    }

    std::sort(g.begin(), g.end(), [&ord](const Poly& a, const Poly& b) {
        Monomial la = leading_monomial(a, ord), lb = leading_monomial(b, ord);
        if (la != lb) return ord.greater(lb, la);
        return false;
    });
    return g;
}

bool ideal_membership(const Poly& f, const std::vector<Poly>& std_basis,
                      const LocalOrdering& ord) {
    if (f.is_zero()) return true;
    return mora_reduce(f, std_basis, ord).is_zero();
}

std::optional<std::vector<Monomial>> staircase_basis(const std::vector<Poly>& std_basis,
                                                     const LocalOrdering& ord) {
    std::vector<Monomial> leads;
    for (const Poly& p : std_basis) {
        if (p.is_zero()) continue;
        leads.push_back(leading_monomial(p, ord));
    }
    if (leads.empty()) return std::nullopt;
    const int n = leads.front().nvars();

    for (const Monomial& m : leads)
        if (m.degree() == 0) return std::vector<Monomial>{};  // unit ideal

    // Bounding box: each variable needs a pure power in the leading ideal.
    std::vector<int> bound(n, -1);
    for (const Monomial& m : leads) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            if (nz >= 0) {
                pure = false;
                break;
            }
            nz = i;
        }
        if (pure && nz >= 0 && (bound[nz] < 0 || m.e[nz] < bound[nz])) bound[nz] = m.e[nz];
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<Monomial> out;
    Monomial m(n);
    // Odometer over the box [0,bound_i), keeping monomials outside the
    // leading ideal.
    while (true) {
        bool divisible = false;
        for (const Monomial& l : leads)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
        int i = 0;
        while (i < n) {
            if (++m.e[i] < bound[i]) break;
            m.e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return CanonMonoLess{}(a, b);
    });
    return out;
}

std::optional<int> quotient_dimension(const std::vector<Poly>& std_basis,
                                      const LocalOrdering& ord) {
    auto sb = staircase_basis(std_basis, ord);
    if (!sb) return std::nullopt;
    return static_cast<int>(sb->size());
}

}  // namespace germ
