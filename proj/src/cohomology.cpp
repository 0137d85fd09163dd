#include "germ/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "germ/enumerate.hpp"
#include "germ/linalg.hpp"
#include "germ/local_algebra.hpp"
#include "germ/singularity.hpp"

namespace germ {

int default_start_truncation(int mu) { return 2 * mu + 2; }
int max_truncation(int mu) { return 4 * mu + 8; }

namespace {

Poly top_coeff(const PForm& w) {
    IndexTuple full(w.ring()->nvars());
    std::iota(full.begin(), full.end(), 0);
    return w.coeff(full);
}

PForm differential_form(const Poly& f) {
    PForm df = PForm::zero(f.ring(), 1);
    for (int i = 0; i < f.ring()->nvars(); ++i) {
        Poly p = f.partial(i);
        if (!p.is_zero()) df.add_term({i}, p);
    }
    return df;
}

// Jet window of top-form coefficients in degrees <= M, columns in canonical
// monomial order, plus the echelonized span of the mod-out subspace
//   { df ^ d(x^b dx_I) } + { f * m }
// with generator degrees capped where the window jet becomes zero.
struct JetSpan {
    RingPtr ring;
    int window = 0;
    std::vector<Monomial> cols;
    std::map<Monomial, int, CanonMonoLess> col_id;
    SparseEchelon ech;
    PForm df;

    SparseIntRow row_of(const Poly& p) const {
        std::vector<std::pair<int, Rational>> entries;
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() > window) break;
            entries.emplace_back(col_id.at(m), c);
        }
        return make_int_row(entries);
    }
};

JetSpan build_span(const Poly& f, int N) {
    const RingPtr ring = f.ring();
    const int nvars = ring->nvars();
    const int degf = *f.degree();
    const int ordf = *f.order();
    const int M = N - degf - 1;
    if (M < 0)
        throw TruncationTooLowError("truncation below the evaluation window for this germ");

    JetSpan js;
    js.ring = ring;
    js.window = M;
    js.cols = monomials_up_to(nvars, M);
    for (std::size_t i = 0; i < js.cols.size(); ++i)
        js.col_id.emplace(js.cols[i], static_cast<int>(i));
    js.df = differential_form(f);

    // df ^ d(x^b dx_I): the window jet vanishes once |b| + ord(f) - 2 > M,
    // so higher b contribute nothing to the span.
    const int bmax = std::min(N, M + 2 - ordf);
    const auto tuples = index_tuples(nvars, nvars - 2);
    for (const Monomial& b : monomials_up_to(nvars, bmax)) {
        Poly xb = Poly::term(ring, b, Rational(1));
        for (const IndexTuple& I : tuples) {
            PForm g = PForm::term(ring, xb, I);
            Poly c = top_coeff(wedge(js.df, exterior_derivative(g)));
            if (c.is_zero()) continue;
            js.ech.insert(js.row_of(c));
        }
    }
    // f * m rows; zero in the window once |m| + ord(f) > M.
    for (const Monomial& b : monomials_up_to(nvars, std::min(N, M - ordf))) {
        Poly c = f * Poly::term(ring, b, Rational(1));
        js.ech.insert(js.row_of(c));
    }
    return js;
}

// Extends the echelon with rows df ^ (x^b dx_J), recording the monomial
// forms that enlarge the span; consumes the JetSpan's echelon.
KernelResult kernel_from(JetSpan& js, const Poly& f, int N) {
    const RingPtr ring = f.ring();
    const int nvars = ring->nvars();
    const int ordf = *f.order();

    KernelResult kr;
    // df ^ (x^b dx_J) has coefficient degree |b| + ord(f) - 1 at least.
    const int bmax = std::min(N, js.window + 1 - ordf);
    const auto tuples = index_tuples(nvars, nvars - 1);
    for (const Monomial& b : monomials_up_to(nvars, bmax)) {
        Poly xb = Poly::term(ring, b, Rational(1));
        for (const IndexTuple& J : tuples) {
            PForm a = PForm::term(ring, xb, J);
            Poly c = top_coeff(wedge(js.df, a));
            if (c.is_zero()) continue;
            if (js.ech.insert(js.row_of(c))) {
                kr.basis.push_back(a);
                ++kr.dim;
            }
        }
    }
    return kr;
}

}  // namespace

int brieskorn_quotient_dim(const Poly& f, int N) {
    JetSpan js = build_span(f, N);
    return static_cast<int>(js.cols.size()) - js.ech.rank();
}

KernelResult kernel_pi_at(const Poly& f, int N) {
    JetSpan js = build_span(f, N);
    return kernel_from(js, f, N);
}

ClassResult givental_class_is_zero(const Poly& f, const PForm& a, int start_n) {
    auto mu = milnor_number(f);
    if (!mu) throw NonIsolatedError();
    if (a.form_degree() != f.ring()->nvars() - 1)
        throw InvalidInputError("class test expects a form of degree one below top");

    Poly c = top_coeff(wedge(differential_form(f), a));
    const int degf = *f.degree();
    int start = std::max({start_n, default_start_truncation(*mu), degf + 1});
    if (!c.is_zero()) start = std::max(start, *c.degree() + degf + 1);
    const int maxn = std::max(max_truncation(*mu), start + 4);

    auto compute = [&](int N) -> std::pair<int, bool> {
        JetSpan js = build_span(f, N);
        bool member = c.is_zero() || js.ech.member(js.row_of(c));
        return {static_cast<int>(js.cols.size()) - js.ech.rank(), member};
    };
    auto [value, at] = stabilize<std::pair<int, bool>>(start, maxn, compute);
    return {value.second, at};
}

bool restriction_vanishes(const Poly& f, const PForm& a) {
    if (!is_isolated(f)) throw NonIsolatedError();
    if (a.is_zero()) return true;
    if (a.form_degree() != f.ring()->nvars() - 1)
        throw InvalidInputError("restriction test expects a form of degree one below top");
    Poly c = top_coeff(wedge(differential_form(f), a));
    if (c.is_zero()) return true;
    LocalOrdering ord;
    return ideal_membership(c, standard_basis({f}, ord), ord);
}

CohomologyReport verify_ses1(const Poly& f) {
    SingularityReport s = analyze(f);

    CohomologyReport r;
    r.mu = s.mu;
    r.tau = s.tau;

    const int start = std::max(default_start_truncation(s.mu), *f.degree() + 1);
    const int maxn = max_truncation(s.mu);
    auto compute = [&](int N) -> std::pair<int, int> {
        JetSpan js = build_span(f, N);
        int window_dim = static_cast<int>(js.cols.size());
        int l_rank = js.ech.rank();
        KernelResult kr = kernel_from(js, f, N);
        return {window_dim - l_rank, kr.dim};
    };
    auto [dims, at] = stabilize<std::pair<int, int>>(start, maxn, compute);
    r.brieskorn = dims.first;
    r.ker_pi = dims.second;
    r.stabilized_at = at;
    r.kernel_basis = kernel_pi_at(f, at).basis;
    r.ses1_consistent = (r.brieskorn == s.mu) && (r.ker_pi == s.mu - s.tau);
    return r;
}

}  // namespace germ
