#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "germ/error.hpp"
#include "germ/forms.hpp"
#include "germ/poly.hpp"

namespace germ {

// Runs compute at N, N+2, ... until two consecutive results are equal;
// returns the stable value and the first truncation of the equal pair.
// Throws TruncationTooLowError past max_n.
template <class T, class F>
std::pair<T, int> stabilize(int start, int max_n, F&& compute) {
    int n = start;
    T prev = compute(n);
    while (n + 2 <= max_n) {
        T next = compute(n + 2);
        if (next == prev) return {prev, n};
        prev = std::move(next);
        n += 2;
    }
    throw TruncationTooLowError(
        "jet dimension did not stabilize by truncation " + std::to_string(max_n));
}

// Defaults for the stabilization loop, in terms of mu.
int default_start_truncation(int mu);
int max_truncation(int mu);

// Codimension, inside the window of degrees <= N - deg(f) - 1, of the span
// of { df ^ d(x^b dx_I) : |b| <= N } and { f * m : deg m <= N }. Equals mu
// once stabilized.
int brieskorn_quotient_dim(const Poly& f, int N);

struct KernelResult {
    int dim = 0;
    std::vector<PForm> basis;  // monomial n-forms a with df^a spanning the quotient
    bool operator==(const KernelResult& o) const {
        return dim == o.dim && basis == o.basis;
    }
};

// Dimension of span{ df ^ a : a monomial n-form } modulo the subspace above,
// with representatives. Equals mu - tau once stabilized.
KernelResult kernel_pi_at(const Poly& f, int N);

struct ClassResult {
    bool zero = false;
    int stabilized_at = 0;
};

// Jet-level vanishing of the class of a (an n-form): membership of df ^ a in
// the stabilized subspace. start_n = 0 picks the default; the window is
// always widened to hold the full jet of df ^ a.
ClassResult givental_class_is_zero(const Poly& f, const PForm& a, int start_n = 0);

// df ^ a lies in (f) * (top forms); exact standard-basis membership.
bool restriction_vanishes(const Poly& f, const PForm& a);

struct CohomologyReport {
    int mu = 0;
    int tau = 0;
    int brieskorn = 0;
    int ker_pi = 0;
    int stabilized_at = 0;
    bool ses1_consistent = false;
    std::vector<PForm> kernel_basis;
};

// Assembles the dimensions of the exact sequence
//   0 -> ker(pi) -> Brieskorn quotient -> deformation space -> 0
// and checks brieskorn = mu and ker_pi = mu - tau.
CohomologyReport verify_ses1(const Poly& f);

}  // namespace germ
