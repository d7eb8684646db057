#include "dshuffle/linalg.hpp"

namespace dshuffle {

void sparse_axpy(SparseVec& y, const Q& a, const SparseVec& x) {
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.emplace(k, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    } else if (it->second == 0) {
      y.erase(it);
    }
  }
}

SparseVec Echelon::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    Q c = it->second;
    sparse_axpy(v, -c, r->second);  // kills column col, touches only larger ones
    it = v.upper_bound(col);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Q lead = v.begin()->second;
  for (auto& kv : v) kv.second /= lead;
  int p = v.begin()->first;
  rows_.emplace(p, std::move(v));
  return true;
}

std::optional<LinearSolution> solve_linear(const std::vector<std::vector<Q>>& a,
                                           const std::vector<Q>& b,
                                           const std::vector<Q>& free_values) {
  const size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<std::vector<Q>> t(m, std::vector<Q>(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n] = b[i];
  }
  LinearSolution sol;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && t[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(t[p], t[row]);
    Q inv = 1 / t[row][col];
    for (size_t j = col; j <= n; ++j) t[row][j] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Q f = t[i][col];
      for (size_t j = col; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    sol.pivots.push_back((int)col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (t[i][n] != 0) return std::nullopt;
  std::vector<bool> is_piv(n, false);
  for (int p : sol.pivots) is_piv[p] = true;
  sol.x.assign(n, Q(0));
  for (size_t j = 0; j < n; ++j)
    if (!is_piv[j]) {
      size_t k = sol.free_columns.size();
      sol.x[j] = k < free_values.size() ? free_values[k] : Q(0);
      sol.free_columns.push_back((int)j);
    }
  for (size_t r = 0; r < sol.pivots.size(); ++r) {
    Q v = t[r][n];
    for (int f : sol.free_columns) v -= t[r][f] * sol.x[f];
    sol.x[sol.pivots[r]] = v;
  }
  return sol;
}

}  // namespace dshuffle
