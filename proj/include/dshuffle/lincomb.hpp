// Finite linear combinations over an ordered basis.
#pragma once

#include <functional>
#include <map>

#include "dshuffle/series.hpp"

namespace dshuffle {

template <class K, class S = Q, class Less = std::less<K>>
class LinComb {
 public:
  using Map = std::map<K, S, Less>;
  using key_type = K;

  LinComb() = default;
  LinComb(const K& k, const S& c) { add(k, c); }

  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }

  void add(const K& k, const S& c) {
    if (is_zero_scalar(c)) return;
    auto [it, fresh] = c_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_scalar(it->second)) c_.erase(it);
    }
  }
  S coeff(const K& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? S(0) : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.c_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.c_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const S& s) {
    if (is_zero_scalar(s)) c_.clear();
    for (auto& kv : c_) kv.second *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= S(-1); }
  friend LinComb operator*(const S& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.c_ == b.c_; }

  // Bilinear extension of a basis product K x K -> LinComb.
  template <class F>
  friend LinComb bilinear(const LinComb& a, const LinComb& b, F mul) {
    LinComb r;
    for (const auto& [x, cx] : a.c_)
      for (const auto& [y, cy] : b.c_) {
        S c = cx * cy;
        const auto xy = mul(x, y);
        for (const auto& [z, cz] : xy.terms()) r.add(z, c * cz);
      }
    return r;
  }

 private:
  Map c_;
};

// Tensor square of a LinComb basis.
template <class K, class Less>
struct PairLess {
  bool operator()(const std::pair<K, K>& a, const std::pair<K, K>& b) const {
    Less l;
    if (l(a.first, b.first)) return true;
    if (l(b.first, a.first)) return false;
    return l(a.second, b.second);
  }
};

template <class K, class S = Q, class Less = std::less<K>>
using LinComb2 = LinComb<std::pair<K, K>, S, PairLess<K, Less>>;

template <class K, class S, class Less>
LinComb2<K, S, Less> tensor_product(const LinComb<K, S, Less>& a, const LinComb<K, S, Less>& b) {
  LinComb2<K, S, Less> r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r.add({x, y}, cx * cy);
  return r;
}

// (a (x) b)(c (x) d) = ac (x) bd for a basis product returning LinComb.
template <class K, class S, class Less, class F>
LinComb2<K, S, Less> tensor_mul(const LinComb2<K, S, Less>& a, const LinComb2<K, S, Less>& b,
                                F mul) {
  LinComb2<K, S, Less> r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      auto l = mul(x.first, y.first);
      auto rr = mul(x.second, y.second);
      S c = cx * cy;
      for (const auto& [p, cp] : l.terms())
        for (const auto& [q, cq] : rr.terms()) r.add({p, q}, c * cp * cq);
    }
  return r;
}

}  // namespace dshuffle
