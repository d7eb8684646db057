#include <istream>
#include <ostream>
#include <sstream>

#include "dshuffle/dmr.hpp"
#include "dshuffle/linalg.hpp"

namespace dshuffle::dmr {

using braids::UP5;

UP5 up5_substitute(const Series<Q>& a, const std::vector<UP5>& img) {
  const int n = img.at(0).trunc();
  std::map<Word, UP5, LenLex> cache;
  cache.emplace(Word{}, UP5::one(n));
  UP5 r(n);
  for (const auto& [w, c] : a.terms()) {
    if ((int)w.size() > n) continue;
    Word pre;
    const UP5* cur = &cache.at(Word{});
    for (Letter l : w) {
      pre.push_back(l);
      auto it = cache.find(pre);
      if (it == cache.end()) it = cache.emplace(pre, (*cur) * img.at(l)).first;
      cur = &it->second;
    }
    r += c * (*cur);
  }
  return r;
}

// Faces 0..4 are (2,3,4), (1,23,4), (1,2,3), (12,3,4), (1,2,34), with e0^{I,J,K} = e_{I,J}, e1^{I,J,K} = e_{J,K}, e_{ij,k} = e_ik + e_jk.
std::vector<UP5> pentagon_images(int face, int n) {
  auto e = [n](int i, int j) { return UP5::generator(i, j, n); };
  switch (face) {
    case 0: return {e(2, 3), e(3, 4)};
    case 1: return {e(1, 2) + e(1, 3), e(2, 4) + e(3, 4)};
    case 2: return {e(1, 2), e(2, 3)};
    case 3: return {e(1, 3) + e(2, 3), e(3, 4)};
    case 4: return {e(1, 2), e(2, 3) + e(2, 4)};
  }
  throw std::invalid_argument("pentagon_images: face must be 0..4");
}

// Phi^{2,3,4} Phi^{1,23,4} Phi^{1,2,3} - Phi^{1,2,34} Phi^{12,3,4}.  With the two
// right-hand factors in the other order the system has no solution in degree 4.
UP5 pentagon_residual(const Series<Q>& phi, bool printed_order) {
  const int n = phi.trunc();
  UP5 f[5];
  for (int k = 0; k < 5; ++k) f[k] = up5_substitute(phi, pentagon_images(k, n));
  UP5 lhs = f[0] * f[1] * f[2];
  return printed_order ? lhs - f[3] * f[4] : lhs - f[4] * f[3];
}

// ---------- Lie basis ----------

std::vector<Series<Q>> lie_basis(int degree, int n) {
  if (degree < 1 || degree > n) throw std::invalid_argument("lie_basis: degree out of range");
  std::vector<Word> words = words_of_degree(degree);
  std::map<Word, int, LenLex> col;
  for (size_t i = 0; i < words.size(); ++i) col[words[i]] = (int)i;
  Echelon ech;
  std::vector<Series<Q>> out;
  for (const Word& w : words) {
    // left-normed [[[w1,w2],w3],...]
    Series<Q> b = Series<Q>::letter(w[0], n);
    for (size_t k = 1; k < w.size(); ++k) b = bracket(b, Series<Q>::letter(w[k], n));
    if (b.is_zero()) continue;
    SparseVec v;
    for (const auto& [u, c] : b.terms()) v[col.at(u)] = c;
    if (ech.insert(v)) out.push_back(b);
  }
  return out;
}

// ---------- solver ----------

SolveResult solve_associator(const Q& mu, int n, const SolveOptions& opt) {
  if (n < 0 || n > kMaxSolverDegree)
    throw std::invalid_argument("solve_associator: degree must be in 0.." + std::to_string(kMaxSolverDegree));
  SolveResult res;
  Series<Q> psi(n);
  for (int d = 1; d <= n; ++d) {
    std::vector<Series<Q>> basis = lie_basis(d, d);
    // known part: pentagon residual of exp(psi_{<d}) at degree d
    UP5 rest = pentagon_residual(exp_series(psi.retruncate(d)), opt.printed_order);
    for (const auto& [k, c] : rest.terms().terms())
      if ((int)(k.first.size() + k.second.size()) < d)
        throw std::logic_error("solve_associator: lower-degree residual survived");
    // linear part: psi_d enters each face through its degree-d term only
    std::vector<UP5> lin;
    for (const auto& b : basis) {
      UP5 l(d);
      for (int k = 0; k < 5; ++k) {
        UP5 im = up5_substitute(b, pentagon_images(k, d));
        if (k < 3) l += im; else l -= im;
      }
      lin.push_back(l);
    }
    std::map<braids::UPKey, int, braids::UPLess> row;
    auto index = [&](const braids::UPKey& k) { return row.emplace(k, (int)row.size()).first->second; };
    for (const auto& [k, c] : rest.terms().terms()) index(k);
    for (const auto& l : lin)
      for (const auto& [k, c] : l.terms().terms()) index(k);
    const size_t m = basis.size();
    std::vector<std::vector<Q>> a(row.size(), std::vector<Q>(m));
    std::vector<Q> rhs(row.size());
    for (size_t j = 0; j < m; ++j)
      for (const auto& [k, c] : lin[j].terms().terms()) a[row.at(k)][j] = c;
    for (const auto& [k, c] : rest.terms().terms()) rhs[row.at(k)] = -c;
    // coefficient conditions
    auto constrain = [&](const Word& w, const Q& value) {
      std::vector<Q> r(m);
      for (size_t j = 0; j < m; ++j) r[j] = basis[j].coeff(w);
      a.push_back(r);
      rhs.push_back(value);
    };
    if (d == 1) {
      constrain(Word{0}, 0);
      constrain(Word{1}, 0);
    }
    if (d == 2) constrain(Word{0, 1}, mu * mu / 24);
    std::vector<Q> fv;
    if (auto it = opt.free_values.find(d); it != opt.free_values.end()) fv = it->second;
    auto sol = solve_linear(a, rhs, fv);
    if (!sol) throw std::runtime_error("solve_associator: infeasible system at degree " + std::to_string(d));
    res.free_count[d] = (int)sol->free_columns.size();
    for (size_t j = 0; j < m; ++j) psi += sol->x[j] * basis[j].retruncate(n);
  }
  res.log_phi = psi;
  res.point = {mu, exp_series(psi)};
  return res;
}

// ---------- assoc.v1 ----------

void write_assoc(std::ostream& os, const Q& mu, const Series<Q>& log_phi) {
  os << "assoc.v1\n"
     << "mu " << mu.get_str() << "\n"
     << "trunc " << log_phi.trunc() << "\n";
  for (int d = 1; d <= log_phi.trunc(); ++d) {
    os << "degree " << d << "\n";
    Series<Q> h = log_phi.homogeneous(d);
    for (const auto& [w, c] : h.terms()) os << word_string(w) << " " << c.get_str() << "\n";
  }
}

GDRPoint read_assoc(std::istream& is, Series<Q>* log_phi) {
  std::string line;
  auto bad = [](const std::string& why) { return std::runtime_error("assoc.v1: " + why); };
  if (!std::getline(is, line) || line != "assoc.v1") throw bad("missing header line");
  Q mu;
  int n = -1, degree = -1;
  bool have_mu = false;
  Series<Q> psi;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b;
    ls >> a >> b;
    if (a.empty() || b.empty()) throw bad("malformed line '" + line + "'");
    if (a == "mu") {
      mu = Q(b);
      mu.canonicalize();
      have_mu = true;
    } else if (a == "trunc") {
      n = std::stoi(b);
      if (n < 0) throw bad("negative truncation");
      psi = Series<Q>(n);
    } else if (a == "degree") {
      degree = std::stoi(b);
      if (n < 0 || degree < 1 || degree > n) throw bad("degree out of range");
    } else {
      if (degree < 0) throw bad("coefficient before any degree line");
      Word w = parse_word(a);
      if ((int)w.size() != degree) throw bad("word " + a + " listed under degree " + std::to_string(degree));
      Q c(b);
      c.canonicalize();
      psi.add(w, c);
    }
  }
  if (!have_mu || n < 0) throw bad("missing mu or trunc");
  if (!is_primitive(psi)) throw bad("log Phi is not primitive");
  if (log_phi) *log_phi = psi;
  return {mu, exp_series(psi)};
}

}  // namespace dshuffle::dmr
