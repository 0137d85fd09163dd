#include "germ/linalg.hpp"

#include <algorithm>

namespace germ {

namespace {

void normalize_content(SparseIntRow& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1) {
        for (auto& [c, v] : r) v /= g;
    }
}

// r <- pl * r - rl * p, merging sorted sparse rows.
SparseIntRow combine(const SparseIntRow& r, const mpz_class& pl, const SparseIntRow& p,
                     const mpz_class& rl) {
    SparseIntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, pl * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -rl * p[j].second);
            ++j;
        } else {
            mpz_class v = pl * r[i].second - rl * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseIntRow make_int_row(const std::vector<std::pair<int, Rational>>& entries) {
    std::map<int, Rational> acc;
    for (const auto& [c, v] : entries) {
        if (v.is_zero()) continue;
        auto [it, fresh] = acc.emplace(c, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    mpz_class l = 1;
    for (const auto& [c, v] : acc) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    SparseIntRow r;
    r.reserve(acc.size());
    for (const auto& [c, v] : acc) r.emplace_back(c, mpz_class(v.num() * (l / v.den())));
    normalize_content(r);
    return r;
}

SparseIntRow SparseEchelon::reduce(SparseIntRow r) const {
    normalize_content(r);
    while (!r.empty()) {
        auto it = rows_.find(r.front().first);
        if (it == rows_.end()) break;
        const SparseIntRow& p = it->second;
        r = combine(r, p.front().second, p, r.front().second);
        normalize_content(r);
    }
    return r;
}

bool SparseEchelon::insert(SparseIntRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    int lead = r.front().first;
    rows_.emplace(lead, std::move(r));
    return true;
}

int dense_rank(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t piv = rr;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[rr], a[piv]);
        for (std::size_t i = rr + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[rr][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rr][j];
        }
        ++rank;
        ++rr;
    }
    return rank;
}

std::optional<std::vector<Rational>> dense_solve(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t piv = rr;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[rr], a[piv]);
        std::swap(b[rr], b[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rr || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[rr][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rr][j];
            b[i] -= f * b[rr];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rr;
    }
    for (std::size_t i = rr; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
    return x;
}

}  // namespace germ
