#include <random>

#include "dshuffle/batteries.hpp"
#include "dshuffle/dmr.hpp"

namespace dshuffle::dmr {

using betti::GroupAlg;
using betti::GroupAlg2;

namespace {

// (f (x) f)(t) for a map f on group words, with a per-word cache.
template <class F>
Tensor<Q> apply_pair(const GroupAlg2& t, F f, int n) {
  std::map<FreeWord, Series<Q>, FreeLess> cache;
  auto get = [&](const FreeWord& w) -> const Series<Q>& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, f(betti::ga_word(w))).first;
    return it->second;
  };
  Tensor<Q> r(n);
  for (const auto& [k, c] : t.terms()) r += c * Tensor<Q>::product(get(k.first), get(k.second));
  return r;
}

std::vector<GroupAlg> fixed_battery() {
  GroupAlg one = betti::ga_one();
  GroupAlg x1m1 = betti::ga_word(FreeWord{fgen(betti::X1)}) - one;
  return {one, x1m1, betti::y_generator(1, 1), betti::y_generator(2, 1)};
}

}  // namespace

std::vector<GroupAlg> theorem_3_2_w_battery(int random_count, unsigned seed) {
  std::vector<GroupAlg> out = fixed_battery();
  std::mt19937 rng(seed);
  GroupAlg x1m1 = out[1];
  for (int i = 0; i < random_count; ++i) {
    GroupAlg a = betti::ga_mul(random_group_alg(rng, 3, 3), x1m1);
    a += betti::ga_word(FreeWord{}, Q(i % 3));
    out.push_back(a);
  }
  return out;
}

std::vector<GroupAlg> theorem_3_2_m_battery(int random_count, unsigned seed) {
  std::vector<GroupAlg> out = fixed_battery();
  std::mt19937 rng(seed);
  for (int i = 0; i < random_count; ++i) out.push_back(random_group_alg(rng, 3, 3));
  return out;
}

DiagramReport check_theorem_3_2(const GDRPoint& p, const std::vector<GroupAlg>& w_inputs,
                                const std::vector<GroupAlg>& m_inputs) {
  const int n = p.g.trunc();
  DiagramReport rep;
  auto fW = [&](const GroupAlg& a) { return gamma_comp_W(p, a); };
  auto fM = [&](const GroupAlg& a) { return gamma_comp_M(p, a); };
  for (const auto& b : w_inputs) {
    if (!betti::in_WB(b)) throw std::invalid_argument("theorem 3.2: input not in W^B: " + betti::group_alg_string(b));
    Tensor<Q> lhs = dr::delta_W_DR_expanded(fW(b));
    GroupAlg2 db = betti::yb_expand2(betti::delta_W_B(betti::to_WB_generators(b)));
    Tensor<Q> rhs = apply_pair(db, fW, n);
    bool eq = lhs == rhs;
    rep.items.push_back({"W", betti::group_alg_string(b), eq});
    rep.verdict = rep.verdict && eq;
  }
  for (const auto& a : m_inputs) {
    Tensor<Q> lhs = dr::delta_M_DR(fM(a));
    GroupAlg2 da = betti::delta_M_B(betti::mB_class(a));
    Tensor<Q> rhs = apply_pair(da, fM, n);
    bool eq = lhs == rhs;
    rep.items.push_back({"M", betti::group_alg_string(a), eq});
    rep.verdict = rep.verdict && eq;
  }
  return rep;
}

GBPoint torsor_difference(const GDRPoint& p, const GDRPoint& q) {
  GDRPoint r = star(star_inverse(p), q);
  return {r.mu, r.g};
}

GDRPoint left_difference(const GDRPoint& p, const GDRPoint& q) { return star(q, star_inverse(p)); }

DiagramReport stabilizer_check(const GDRPoint& g, const std::vector<Series<Q>>& inputs) {
  const int n = g.g.trunc();
  DiagramReport rep;
  std::map<Word, Series<Q>, LenLex> cache;
  auto rho = [&](const Word& w) -> const Series<Q>& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, gamma_aut_M(g, Series<Q>::monomial(w, 1, n))).first;
    return it->second;
  };
  for (const auto& m : inputs) {
    Tensor<Q> lhs = dr::delta_M_DR(gamma_aut_M(g, m));
    Tensor<Q> rhs(n);
    Tensor<Q> dm = dr::delta_M_DR(m);
    for (const auto& [k, c] : dm.terms())
      rhs += c * Tensor<Q>::product(rho(k.first), rho(k.second));
    bool eq = lhs == rhs;
    rep.items.push_back({"M", series_string(m), eq});
    rep.verdict = rep.verdict && eq;
  }
  return rep;
}

std::vector<Series<Q>> m_basis_inputs(int max_degree, int n) {
  std::vector<Series<Q>> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const Word& w : words_of_degree(d))
      if (w.empty() || w.back() == 1) out.push_back(Series<Q>::monomial(w, 1, n));
  return out;
}

}  // namespace dshuffle::dmr
