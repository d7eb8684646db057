// Free algebra operations: shuffle, the primitive coproduct, exp/log,
// Gamma-series and the regularization map.
#pragma once

#include <array>
#include <functional>
#include <string>

#include "dshuffle/series.hpp"

namespace dshuffle {

// ---------- products and coproducts ----------

// All interleavings of two words, with multiplicity.
void shuffle_words(const Word& u, const Word& v, std::map<Word, long, LenLex>& out);

template <class S>
Series<S> shuffle_mul(const Series<S>& a, const Series<S>& b) {
  require_same_trunc(a.trunc(), b.trunc());
  Series<S> r(a.trunc());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      if ((int)(u.size() + v.size()) > a.trunc()) break;
      std::map<Word, long, LenLex> sh;
      shuffle_words(u, v, sh);
      S cc = cu * cv;
      for (const auto& [w, m] : sh) r.add(w, cc * S(m));
    }
  return r;
}

// Delta^{V,DR}: each letter primitive. On a word this is the sum over all
// ways of splitting the positions into a left and a right subword.
template <class S>
Tensor<S> delta_V_DR(const Series<S>& a) {
  Tensor<S> r(a.trunc());
  for (const auto& [w, c] : a.terms()) {
    const size_t n = w.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      Word l, rr;
      for (size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? l : rr).push_back(w[i]);
      r.add(l, rr, c);
    }
  }
  return r;
}

template <class S>
Tensor<S> grouplike_defect(const Series<S>& a) {
  return delta_V_DR(a) - Tensor<S>::product(a, a);
}

template <class S>
bool is_grouplike(const Series<S>& a) {
  return a.constant() == 1 && grouplike_defect(a).is_zero();
}

template <class S>
bool is_primitive(const Series<S>& a) {
  if (!(a.constant() == 0)) return false;
  Series<S> one = Series<S>::one(a.trunc());
  Tensor<S> d = delta_V_DR(a) - Tensor<S>::product(a, one) - Tensor<S>::product(one, a);
  return d.is_zero();
}

// ---------- exp / log / inverse ----------

template <class S>
Series<S> exp_series(const Series<S>& a) {
  if (!(a.constant() == 0)) throw std::domain_error("exp: nonzero constant term");
  const int n = a.trunc();
  Series<S> r = Series<S>::one(n), p = Series<S>::one(n);
  for (int k = 1; k <= n; ++k) {
    p = p * a;
    if (p.is_zero()) break;
    p *= S(1) / S(k);
    r += p;
  }
  return r;
}

template <class S>
Series<S> log_series(const Series<S>& a) {
  if (!(a.constant() == 1)) throw std::domain_error("log: constant term is not 1");
  const int n = a.trunc();
  Series<S> x = a - Series<S>::one(n);
  Series<S> r(n), p = Series<S>::one(n);
  for (int k = 1; k <= n; ++k) {
    p = p * x;
    if (p.is_zero()) break;
    S c = S(k % 2 ? 1 : -1) / S(k);
    r += c * p;
  }
  return r;
}

template <class S>
Series<S> inverse_series(const Series<S>& a) {
  S c0 = a.constant();
  if (c0 == 0) throw std::domain_error("inverse: constant term is zero");
  const int n = a.trunc();
  S ic = S(1) / c0;
  Series<S> x = ic * a - Series<S>::one(n);  // a = c0 (1 + x)
  Series<S> r = Series<S>::one(n), p = Series<S>::one(n);
  for (int k = 1; k <= n; ++k) {
    p = S(-1) * (p * x);
    if (p.is_zero()) break;
    r += p;
  }
  return ic * r;
}

template <class S>
Series<S> bracket(const Series<S>& a, const Series<S>& b) {
  return a * b - b * a;
}

// ---------- algebra morphisms ----------

// Image of an arbitrary series under the algebra morphism sending letter i
// to img[i]. Word images are built from cached prefixes.
template <class S>
Series<S> substitute(const Series<S>& a, const std::vector<Series<S>>& img) {
  const int n = img.empty() ? a.trunc() : img[0].trunc();
  std::map<Word, Series<S>, LenLex> cache;
  cache.emplace(Word{}, Series<S>::one(n));
  Series<S> r(n);
  for (const auto& [w, c] : a.terms()) {
    Word pre;
    const Series<S>* cur = &cache.at(Word{});
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

// Same for tensors: letters go to elements of the tensor square.
template <class S>
Tensor<S> substitute_tensor(const Series<S>& a, const std::vector<Tensor<S>>& img) {
  const int n = img.at(0).trunc();
  Tensor<S> unit(n);
  unit.add(Word{}, Word{}, S(1));
  std::map<Word, Tensor<S>, LenLex> cache;
  cache.emplace(Word{}, unit);
  Tensor<S> r(n);
  for (const auto& [w, c] : a.terms()) {
    Word pre;
    const Tensor<S>* cur = &cache.at(Word{});
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

// ---------- Gamma ----------

template <class S>
Univariate<S> exp_univariate(const Univariate<S>& f) {
  if (!(f.c[0] == 0)) throw std::domain_error("exp: nonzero constant term");
  const int n = f.trunc();
  Univariate<S> r(n);
  r.c[0] = 1;
  // r' = f' r
  for (int k = 1; k <= n; ++k) {
    S s(0);
    for (int j = 1; j <= k; ++j) s += S(j) * f.c[j] * r.c[k - j];
    r.c[k] = s / S(k);
  }
  return r;
}

// Gamma_g(t) = exp(sum_{n>=1} (-1)^{n+1} (g|e0^{n-1}e1) t^n / n)
template <class S>
Univariate<S> gamma_series(const Series<S>& g) {
  const int n = g.trunc();
  Univariate<S> f(n);
  for (int k = 1; k <= n; ++k) {
    Word w(k - 1, 0);
    w.push_back(1);
    S c = g.coeff(w) / S(k);
    f.c[k] = (k % 2) ? c : S(-c);
  }
  return exp_univariate(f);
}

// Gamma_g(-e1) as an element of the series algebra
template <class S>
Series<S> gamma_at_minus_e1(const Series<S>& g) {
  Univariate<S> u = gamma_series(g);
  Series<S> r(g.trunc());
  for (int k = 0; k <= g.trunc(); ++k) r.add(Word(k, 1), (k % 2) ? S(-u.c[k]) : u.c[k]);
  return r;
}

// ---------- regularization ----------

bool is_admissible(const Word& w);
Series<Q> reg_word(const Word& w);

// ---------- rendering ----------

std::string scalar_string(const Q& q);
std::string series_string(const Series<Q>& a);
std::string tensor_string(const Tensor<Q>& t);

}  // namespace dshuffle
