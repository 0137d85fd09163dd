#include "germ/interp.hpp"

#include <optional>

#include "germ/compose.hpp"
#include "germ/enumerate.hpp"
#include "germ/error.hpp"
#include "germ/linalg.hpp"

namespace germ {

namespace {

// Multiplication by the homogeneous polynomial fm as a matrix from degree-d
// monomials to degree-(d + deg fm) monomials; injective since the ring is a
// domain, so solutions are unique when they exist.
struct GradedMul {
    std::vector<Monomial> cols;
    std::vector<std::vector<Rational>> mat;  // indexed [row][col]
    std::map<Monomial, int, CanonMonoLess> row_id;
};

GradedMul graded_mul(const Poly& fm, int d) {
    const int n = fm.ring()->nvars();
    const int m = *fm.degree();
    GradedMul g;
    g.cols = monomials_of_degree(n, d);
    std::vector<Monomial> rows = monomials_of_degree(n, d + m);
    for (std::size_t i = 0; i < rows.size(); ++i)
        g.row_id.emplace(rows[i], static_cast<int>(i));
    g.mat.assign(rows.size(), std::vector<Rational>(g.cols.size(), Rational(0)));
    for (std::size_t j = 0; j < g.cols.size(); ++j)
        for (const auto& [mono, c] : fm.terms())
            g.mat[g.row_id.at(mono * g.cols[j])][j] = c;
    return g;
}

// Solves q * fm = target for homogeneous q of degree d; target homogeneous
// of degree d + deg fm. nullopt when no solution exists.
std::optional<Poly> solve_graded(const GradedMul& g, const Poly& target, const RingPtr& ring) {
    std::vector<Rational> b(g.mat.size(), Rational(0));
    for (const auto& [mono, c] : target.terms()) b[g.row_id.at(mono)] = c;
    auto x = dense_solve(g.mat, b);
    if (!x) return std::nullopt;
    Poly q = Poly::zero(ring);
    for (std::size_t j = 0; j < g.cols.size(); ++j) q.add_term(g.cols[j], (*x)[j]);
    return q;
}

// Indefinite t-antiderivative vanishing at t = 0.
TimePoly antiderivative_t(const TimePoly& q) {
    TimePoly out(Poly::zero(q.ring()));
    for (const auto& [k, p] : q.coeffs())
        out += TimePoly::t_term(Poly::scale(Rational(1, k + 1), p), k + 1);
    return out;
}

// Homogeneous x-degree part of every t-coefficient.
TimePoly homogeneous_x(const TimePoly& q, int d) {
    TimePoly out(Poly::zero(q.ring()));
    for (const auto& [k, p] : q.coeffs()) {
        Poly h = p.homogeneous_part(d);
        if (!h.is_zero()) out += TimePoly::t_term(h, k);
    }
    return out;
}

void require_nonzero_germ(const Poly& f) {
    if (f.is_null() || f.is_zero()) throw InvalidInputError("germ must be nonzero");
    if (!f.constant_term().is_zero())
        throw InvalidInputError("germ must vanish at the origin");
}

}  // namespace

Poly validate_isotropy(const FormalDiffeo& phi, const Poly& f, int N) {
    if (!phi.tangent_to_identity()) throw NotTangentToIdentityError();
    require_nonzero_germ(f);
    check_same_ring(phi.ring, f.ring());
    const RingPtr ring = f.ring();
    const int m = *f.order();
    const Poly fm = f.homogeneous_part(m);

    Poly r = compose(f, phi.comp, N);
    Poly g = Poly::zero(ring);
    for (int d = 0; d + m <= N; ++d) {
        Poly target = r.homogeneous_part(d + m);
        for (int e = 0; e < d; ++e) {
            Poly ge = g.homogeneous_part(e);
            if (ge.is_zero()) continue;
            target -= ge * f.homogeneous_part(d + m - e);
        }
        auto q = solve_graded(graded_mul(fm, d), target, ring);
        if (!q) throw NotIsotropyError();
        g += *q;
    }
    if (mul_trunc(g, f, N) != r.truncated(N)) throw NotIsotropyError();
    return g;
}

TimeDiffeo exp_field(const VectorField& v, int N) {
    if (!v.order_at_least(2))
        throw InvalidInputError("flow requires every component to have order >= 2");
    TimeDiffeo out = TimeDiffeo::identity(v.ring, N);
    for (int i = 0; i < v.ring->nvars(); ++i) {
        Poly u = Poly::variable(v.ring, i);
        Rational inv_fact(1);
        // v^k(x_i) has order >= k+1, so the series is finite at truncation N.
        for (int k = 1; k <= N - 1; ++k) {
            u = v.apply(u, N);
            if (u.is_zero()) break;
            inv_fact = inv_fact / Rational(k);
            out.comp[i].add_t_term(k, Poly::scale(inv_fact, u));
        }
    }
    return out;
}

VectorField log_diffeo(const FormalDiffeo& phi, int N) {
    if (!phi.tangent_to_identity()) throw NotTangentToIdentityError();
    VectorField v = VectorField::zero(phi.ring);
    for (int k = 2; k <= N; ++k) {
        FormalDiffeo e = exp_field(v, k).at(Rational(1));
        for (int i = 0; i < phi.ring->nvars(); ++i) {
            Poly delta = (phi.comp[i] - e.comp[i]).homogeneous_part(k);
            v.comp[i] += delta;
        }
    }
    return v;
}

TimeDiffeo interpolate(const FormalDiffeo& phi, int N) {
    if (!phi.tangent_to_identity()) throw NotTangentToIdentityError();
    const RingPtr ring = phi.ring;
    const int n = ring->nvars();

    TimeDiffeo family = TimeDiffeo::identity(ring, N);
    VectorField gen = VectorField::zero(ring);  // Phi_0', found degree by degree

    for (int k = 2; k <= N; ++k) {
        for (int i = 0; i < n; ++i) {
            // Degree-k part of (Phi_0' o Phi_t)_i from lower-degree data only.
            TimePoly psi = homogeneous_x(substitute(gen.comp[i], family.comp, k), k);
            TimePoly s = antiderivative_t(psi);
            Poly s1 = s.eval(Rational(1));
            Poly c = phi.comp[i].homogeneous_part(k) - s1;
            gen.comp[i] += c;
            TimePoly piece = TimePoly::t_term(c, 1) + s;
            if (!piece.is_zero()) family.comp[i] += piece;
        }
    }
    return family;
}

UnitFamily interpolate_unit(const TimeDiffeo& phi_t, const Poly& f, int N) {
    if (!phi_t.tangent_to_identity()) throw NotTangentToIdentityError();
    require_nonzero_germ(f);
    check_same_ring(phi_t.ring, f.ring());
    const RingPtr ring = f.ring();
    const int m = *f.order();
    const Poly fm = f.homogeneous_part(m);

    TimePoly r = substitute(f, phi_t.comp, N);
    TimePoly g(Poly::zero(ring));
    for (int d = 0; d + m <= N; ++d) {
        TimePoly target = homogeneous_x(r, d + m);
        for (int e = 0; e < d; ++e) {
            TimePoly ge = homogeneous_x(g, e);
            if (ge.is_zero()) continue;
            target -= ge * TimePoly(f.homogeneous_part(d + m - e));
        }
        GradedMul gm = graded_mul(fm, d);
        for (const auto& [k, p] : target.coeffs()) {
            auto q = solve_graded(gm, p, ring);
            if (!q) throw NotIsotropyFamilyError();
            if (!q->is_zero()) g += TimePoly::t_term(*q, k);
        }
    }
    if (mul_trunc(g, TimePoly(f), N) != r.truncated_x(N)) throw NotIsotropyFamilyError();
    return {g, N};
}

}  // namespace germ
