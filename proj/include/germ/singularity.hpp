#pragma once

#include <optional>
#include <vector>

#include "germ/local_algebra.hpp"
#include "germ/poly.hpp"

namespace germ {

// Invariants of the germ at the origin. d = mu - tau is non-negative and
// vanishes exactly when the germ is quasihomogeneous in suitable
// coordinates; both facts are recomputed and cross-checked in analyze().
struct SingularityReport {
    Poly f;
    int nvars = 0;
    int mu = 0;
    int tau = 0;
    int d = 0;
    bool quasihomogeneous = false;
};

std::vector<Poly> gradient(const Poly& f);

// Dimension of the local ring modulo the gradient ideal; nullopt means the
// singular locus is positive-dimensional. Requires f != 0 and f(0) = 0.
std::optional<int> milnor_number(const Poly& f);

// Dimension modulo (f, gradient); nullopt as above.
std::optional<int> tjurina_number(const Poly& f);

bool is_isolated(const Poly& f);

// mu - tau; throws NonIsolatedError when mu is infinite.
int nonquasihomogeneity_degree(const Poly& f);

// Membership of f in its own gradient ideal; equivalent to mu = tau.
bool saito_test(const Poly& f);

// Computes all invariants through one standard basis per ideal and checks
// the membership test against mu = tau.
SingularityReport analyze(const Poly& f);

}  // namespace germ
