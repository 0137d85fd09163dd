#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "germ/poly.hpp"

namespace germ {

// Local (anti-graded) monomial orderings: 1 is the largest monomial, lower
// total degree wins, ties broken lexicographically or by reverse lex.
enum class TieBreak { Lex, RevLex };

struct LocalOrdering {
    TieBreak tie = TieBreak::RevLex;

    // a strictly larger than b.
    bool greater(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (tie == TieBreak::Lex) {
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
            return false;
        }
        for (std::size_t i = a.e.size(); i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

// Largest term of a nonzero polynomial under the ordering.
std::pair<Monomial, Rational> leading_term(const Poly& p, const LocalOrdering& ord);
Monomial leading_monomial(const Poly& p, const LocalOrdering& ord);

// Spread between total degree and leading-monomial degree; 0 for a zero or
// homogeneous polynomial.
int ecart(const Poly& p, const LocalOrdering& ord);

// Weak normal form by the tangent-cone variant of division: reducers whose
// ecart exceeds the current remainder's are shelved into the working set so
// the division terminates on polynomial input. The result is zero exactly
// when f lies in the ideal, provided gens is a standard basis.
Poly mora_reduce(const Poly& f, const std::vector<Poly>& gens, const LocalOrdering& ord);

// Buchberger loop with the product criterion; output leading coefficients
// are normalized to 1 and the list is sorted by leading monomial.
std::vector<Poly> standard_basis(const std::vector<Poly>& gens, const LocalOrdering& ord);

bool ideal_membership(const Poly& f, const std::vector<Poly>& std_basis,
                      const LocalOrdering& ord);

// Monomials outside the leading ideal, in canonical order; nullopt when the
// quotient is infinite dimensional (some variable has no pure power among
// the leading monomials).
std::optional<std::vector<Monomial>> staircase_basis(const std::vector<Poly>& std_basis,
                                                     const LocalOrdering& ord);

// Size of the staircase basis.
std::optional<int> quotient_dimension(const std::vector<Poly>& std_basis,
                                      const LocalOrdering& ord);

}  // namespace germ
