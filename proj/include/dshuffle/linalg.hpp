// Exact row reduction over Q.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dshuffle/series.hpp"

namespace dshuffle {

using SparseVec = std::map<int, Q>;

void sparse_axpy(SparseVec& y, const Q& a, const SparseVec& x);  // y += a x

// Incremental echelon form. The pivot of a row is its smallest column.
class Echelon {
 public:
  // Reduce v against the stored rows; the result has no pivot columns.
  SparseVec reduce(SparseVec v) const;
  // Insert v; returns false if v was already in the span.
  bool insert(SparseVec v);
  size_t rank() const { return rows_.size(); }
  bool is_pivot(int col) const { return rows_.count(col) != 0; }

 private:
  std::map<int, SparseVec> rows_;  // pivot -> row with leading coefficient 1
};

// Solve A x = b (dense, A is rows x cols). Free coordinates take the value in
// `free_values` (by order of appearance among non-pivot columns, default 0).
// Returns nullopt if inconsistent.
struct LinearSolution {
  std::vector<Q> x;
  std::vector<int> pivots, free_columns;
};
std::optional<LinearSolution> solve_linear(const std::vector<std::vector<Q>>& a,
                                           const std::vector<Q>& b,
                                           const std::vector<Q>& free_values = {});

}  // namespace dshuffle
