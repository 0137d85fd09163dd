#include "germ/singularity.hpp"

#include "germ/error.hpp"

namespace germ {

namespace {

void check_germ(const Poly& f) {
    if (f.is_null() || f.is_zero()) throw InvalidInputError("germ must be nonzero");
    if (!f.constant_term().is_zero())
        throw InvalidInputError("germ must vanish at the origin");
}

}  // namespace

std::vector<Poly> gradient(const Poly& f) {
    std::vector<Poly> g;
    g.reserve(f.ring()->nvars());
    for (int i = 0; i < f.ring()->nvars(); ++i) g.push_back(f.partial(i));
    return g;
}

std::optional<int> milnor_number(const Poly& f) {
    check_germ(f);
    LocalOrdering ord;
    auto basis = standard_basis(gradient(f), ord);
    return quotient_dimension(basis, ord);
}

std::optional<int> tjurina_number(const Poly& f) {
    check_germ(f);
    LocalOrdering ord;
    std::vector<Poly> gens = gradient(f);
    gens.push_back(f);
    auto basis = standard_basis(gens, ord);
    return quotient_dimension(basis, ord);
}

bool is_isolated(const Poly& f) { return milnor_number(f).has_value(); }

int nonquasihomogeneity_degree(const Poly& f) { return analyze(f).d; }

bool saito_test(const Poly& f) {
    check_germ(f);
    LocalOrdering ord;
    auto basis = standard_basis(gradient(f), ord);
    if (!quotient_dimension(basis, ord)) throw NonIsolatedError();
    return ideal_membership(f, basis, ord);
}

SingularityReport analyze(const Poly& f) {
    check_germ(f);
    LocalOrdering ord;
    auto jac_basis = standard_basis(gradient(f), ord);
    auto mu = quotient_dimension(jac_basis, ord);
    if (!mu) throw NonIsolatedError();

    std::vector<Poly> tj = gradient(f);
    tj.push_back(f);
    auto tau = quotient_dimension(standard_basis(tj, ord), ord);
    if (!tau) throw NonIsolatedError();

    SingularityReport r;
    r.f = f;
    r.nvars = f.ring()->nvars();
    r.mu = *mu;
    r.tau = *tau;
    r.d = *mu - *tau;
    if (r.d < 0) throw Error("internal: mu < tau");

    bool member = ideal_membership(f, jac_basis, ord);
    r.quasihomogeneous = member;
    if (member != (r.d == 0))
        throw Error("internal: gradient membership disagrees with mu == tau");
    return r;
}

}  // namespace germ
