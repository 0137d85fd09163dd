#pragma once

#include <algorithm>
#include <vector>

#include "germ/monomial.hpp"

namespace germ {

// All monomials with total degree <= d, canonical order.
inline std::vector<Monomial> monomials_up_to(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial m(nvars);
    while (true) {
        if (m.degree() <= d) out.push_back(m);
        int i = 0;
        while (i < nvars) {
            if (++m.e[i] <= d) break;
            m.e[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    std::sort(out.begin(), out.end(), CanonMonoLess{});
    return out;
}

// Monomials of total degree exactly d, canonical order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    for (Monomial& m : monomials_up_to(nvars, d))
        if (m.degree() == d) out.push_back(std::move(m));
    return out;
}

// Strictly increasing k-tuples from {0..nvars-1}, lexicographic.
inline std::vector<std::vector<int>> index_tuples(int nvars, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i < nvars; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace germ
