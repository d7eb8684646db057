// The de Rham harmonic side: W^DR = k1 + V e1 in the y_n generators,
// M^DR = V / V e0, and the localizations at e1.
#pragma once

#include <string>
#include <vector>

#include "dshuffle/lincomb.hpp"
#include "dshuffle/ncalg.hpp"

namespace dshuffle::dr {

using YMonomial = std::vector<int>;  // (n_1,...,n_m), n_i >= 1

inline int ydegree(const YMonomial& m) {
  int d = 0;
  for (int n : m) d += n;
  return d;
}

struct YLess {
  bool operator()(const YMonomial& a, const YMonomial& b) const {
    int da = ydegree(a), db = ydegree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

template <class S>
struct WElement {
  int n = 0;
  LinComb<YMonomial, S, YLess> c;
};

template <class S>
using WTensor = LinComb2<YMonomial, S, YLess>;

std::string ymonomial_string(const YMonomial& m);  // "y2*y1", "1"
std::vector<YMonomial> ymonomials_of_degree(int d);

// y_{k1}...y_{km} = (-1)^m e0^{k1-1}e1 ... e0^{km-1}e1
Word y_word(const YMonomial& m);

// Inverse of y_word on words in k1 + V e1; returns false for words ending in e0.
bool word_to_ymonomial(const Word& w, YMonomial& m);

template <class S>
Series<S> w_expand(const WElement<S>& a) {
  Series<S> r(a.n);
  for (const auto& [m, c] : a.c.terms()) r.add(y_word(m), (m.size() % 2) ? S(-c) : c);
  return r;
}

template <class S>
WElement<S> to_y_basis(const Series<S>& a) {
  WElement<S> r;
  r.n = a.trunc();
  for (const auto& [w, c] : a.terms()) {
    YMonomial m;
    if (!word_to_ymonomial(w, m))
      throw std::invalid_argument("to_y_basis: word " + word_string(w) + " is not in W^DR");
    r.c.add(m, (m.size() % 2) ? S(-c) : c);
  }
  return r;
}

// Delta^{W,DR}(y_{n_1}...y_{n_m}) = prod_j sum_i y_i (x) y_{n_j - i}, y_0 = 1
template <class S>
WTensor<S> delta_W_DR_monomial(const YMonomial& m) {
  WTensor<S> r;
  r.add({YMonomial{}, YMonomial{}}, S(1));
  for (int n : m) {
    WTensor<S> nx;
    for (const auto& [k, c] : r.terms())
      for (int i = 0; i <= n; ++i) {
        YMonomial l = k.first, rr = k.second;
        if (i) l.push_back(i);
        if (n - i) rr.push_back(n - i);
        nx.add({l, rr}, c);
      }
    r = std::move(nx);
  }
  return r;
}

template <class S>
WTensor<S> delta_W_DR(const WElement<S>& a) {
  WTensor<S> r;
  for (const auto& [m, c] : a.c.terms()) r += c * delta_W_DR_monomial<S>(m);
  return r;
}

template <class S>
Tensor<S> w_tensor_expand(const WTensor<S>& t, int n) {
  Tensor<S> r(n);
  for (const auto& [k, c] : t.terms()) {
    bool neg = (k.first.size() + k.second.size()) % 2;
    r.add(y_word(k.first), y_word(k.second), neg ? S(-c) : c);
  }
  return r;
}

// ---------- M^DR ----------

template <class S>
Series<S> m_class(const Series<S>& v) {
  Series<S> r(v.trunc());
  for (const auto& [w, c] : v.terms())
    if (w.empty() || w.back() == 1) r.add(w, c);
  return r;
}

template <class S>
Tensor<S> m_class2(const Tensor<S>& t) {
  Tensor<S> r(t.trunc());
  for (const auto& [k, c] : t.terms()) {
    auto ok = [](const Word& w) { return w.empty() || w.back() == 1; };
    if (ok(k.first) && ok(k.second)) r.add(k.first, k.second, c);
  }
  return r;
}

// The unique a in W^DR with a 1_DR = m.
template <class S>
WElement<S> w_of_m(const Series<S>& m) {
  return to_y_basis(m_class(m));
}

template <class S>
Tensor<S> delta_M_DR(const Series<S>& m) {
  WElement<S> a = w_of_m(m);
  return w_tensor_expand(delta_W_DR(a), a.n);  // factors already lie in k1 + V e1
}

template <class S>
Tensor<S> delta_W_DR_expanded(const Series<S>& a) {
  WElement<S> w = to_y_basis(a);
  return w_tensor_expand(delta_W_DR(w), a.trunc());
}

template <class S>
bool is_grouplike_M(const Series<S>& m) {
  Series<S> c = m_class(m);
  return c.constant() == 1 && delta_M_DR(c) == Tensor<S>::product(c, c);
}

// ---------- localizations at e1 ----------

// Alternating syllables: (0, a) is an e0-run of length a > 0,
// (1, b) is e1^b with b != 0. No two adjacent syllables of the same kind.
using Syllable = std::pair<Letter, int>;
using LocWord = std::vector<Syllable>;

struct LocLess {
  bool operator()(const LocWord& a, const LocWord& b) const;
};
int loc_degree(const LocWord& w);

using LocElem = LinComb<LocWord, Q, LocLess>;
using LocTensor = LinComb2<LocWord, Q, LocLess>;

LocWord loc_word_mul(const LocWord& a, const LocWord& b);
LocWord loc_of_word(const Word& w);
LocElem loc_mul_DR(const LocElem& a, const LocElem& b);
LocElem loc_from_series(const Series<Q>& a);
LocTensor loc_tensor_from(const Tensor<Q>& t);
LocTensor loc_tensor_mul(const LocTensor& a, const LocTensor& b);
// Class in M^DR[e1^{-1}]: words ending in an e0-run vanish.
LocElem loc_m_class(const LocElem& a);
LocTensor loc_m_class2(const LocTensor& t);
std::string loc_word_string(const LocWord& w);
std::string loc_tensor_string(const LocTensor& t);

// Returns the e-word if w has no negative exponent.
bool loc_to_word(const LocWord& w, Word& out);

}  // namespace dshuffle::dr
