#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

// Sparse integer row: (column, value) pairs sorted by column, values nonzero.
using SparseIntRow = std::vector<std::pair<int, mpz_class>>;

// Clears denominators and divides out the content; leading value positive.
SparseIntRow make_int_row(const std::vector<std::pair<int, Rational>>& entries);

// Incremental fraction-free echelon form over the integers. Rows are only
// leading-reduced (enough for rank and membership); every stored and
// returned row is content-normalized with a positive leading value.
class SparseEchelon {
  public:
    SparseIntRow reduce(SparseIntRow r) const;
    // Reduces r and stores the remainder; true when the rank grew.
    bool insert(SparseIntRow r);
    bool member(const SparseIntRow& r) const { return reduce(r).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseIntRow>& rows() const { return rows_; }

  private:
    std::map<int, SparseIntRow> rows_;
};

// Dense exact Gaussian elimination; used for the small square and
// column-bounded systems in the interpolation solvers and as a cross-check.
int dense_rank(std::vector<std::vector<Rational>> a);

// Solves a x = b, free variables pinned to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> dense_solve(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b);

}  // namespace germ
