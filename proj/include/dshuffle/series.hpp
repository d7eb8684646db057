// Truncated noncommutative power series in e0, e1 and their tensor squares.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dshuffle {

using Q = mpq_class;
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Length first, then lexicographic: e0 < e1, e0e0 < e0e1 < ...
struct LenLex {
  template <class W>
  bool operator()(const W& a, const W& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordPair = std::pair<Word, Word>;

struct PairLenLex {
  bool operator()(const WordPair& a, const WordPair& b) const {
    size_t da = a.first.size() + a.second.size();
    size_t db = b.first.size() + b.second.size();
    if (da != db) return da < db;
    LenLex ll;
    if (a.first != b.first) return ll(a.first, b.first);
    return ll(a.second, b.second);
  }
};

struct TruncationMismatch : std::invalid_argument {
  TruncationMismatch(int a, int b)
      : std::invalid_argument("truncation mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b)) {}
};

inline void require_same_trunc(int a, int b) {
  if (a != b) throw TruncationMismatch(a, b);
}

template <class S>
inline bool is_zero_scalar(const S& x) {
  return x == 0;
}

Word concat(const Word& a, const Word& b);
std::string word_string(const Word& w);  // "e0e1", "1" for empty
Word parse_word(const std::string& s);   // inverse of word_string
std::vector<Word> words_of_degree(int d);

template <class S>
class Series {
 public:
  using Map = std::map<Word, S, LenLex>;

  explicit Series(int n = 0) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative truncation degree");
  }

  static Series one(int n) { return monomial(Word{}, S(1), n); }
  static Series letter(Letter l, int n) { return monomial(Word{l}, S(1), n); }
  static Series monomial(const Word& w, const S& c, int n) {
    Series r(n);
    r.add(w, c);
    return r;
  }

  int trunc() const { return n_; }
  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  S coeff(const Word& w) const {
    if ((int)w.size() > n_) throw std::out_of_range("word beyond truncation");
    auto it = c_.find(w);
    return it == c_.end() ? S(0) : it->second;
  }
  S constant() const { return coeff(Word{}); }

  void add(const Word& w, const S& c) {
    if ((int)w.size() > n_ || is_zero_scalar(c)) return;
    auto [it, fresh] = c_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_scalar(it->second)) c_.erase(it);
    }
  }

  Series& operator+=(const Series& o) {
    require_same_trunc(n_, o.n_);
    for (const auto& [w, c] : o.c_) add(w, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same_trunc(n_, o.n_);
    for (const auto& [w, c] : o.c_) add(w, -c);
    return *this;
  }
  Series& operator*=(const S& s) {
    if (is_zero_scalar(s)) {
      c_.clear();
      return *this;
    }
    for (auto& kv : c_) kv.second *= s;
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= S(-1); }
  friend Series operator*(const S& s, Series a) { return a *= s; }

  friend Series operator*(const Series& a, const Series& b) {
    require_same_trunc(a.n_, b.n_);
    Series r(a.n_);
    for (const auto& [u, cu] : a.c_)
      for (const auto& [v, cv] : b.c_) {
        if ((int)(u.size() + v.size()) > a.n_) break;  // b is sorted by length
        r.add(concat(u, v), cu * cv);
      }
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  Series homogeneous(int d) const {
    Series r(n_);
    for (const auto& [w, c] : c_)
      if ((int)w.size() == d) r.add(w, c);
    return r;
  }
  // lowest degree carrying a nonzero coefficient, -1 for zero
  int order() const { return c_.empty() ? -1 : (int)c_.begin()->first.size(); }

  // Explicit change of truncation. Raising is only allowed when the caller
  // knows the value is exact (e.g. a polynomial of degree <= n).
  Series retruncate(int m) const {
    Series r(m);
    for (const auto& [w, c] : c_) r.add(w, c);
    return r;
  }

 private:
  int n_;
  Map c_;
};

template <class S>
class Tensor {
 public:
  using Map = std::map<WordPair, S, PairLenLex>;

  explicit Tensor(int n = 0) : n_(n) {}

  int trunc() const { return n_; }
  const Map& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void add(const Word& a, const Word& b, const S& c) {
    if ((int)(a.size() + b.size()) > n_ || is_zero_scalar(c)) return;
    auto [it, fresh] = c_.emplace(WordPair{a, b}, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_scalar(it->second)) c_.erase(it);
    }
  }
  S coeff(const Word& a, const Word& b) const {
    auto it = c_.find(WordPair{a, b});
    return it == c_.end() ? S(0) : it->second;
  }

  static Tensor product(const Series<S>& a, const Series<S>& b) {
    require_same_trunc(a.trunc(), b.trunc());
    Tensor r(a.trunc());
    for (const auto& [u, cu] : a.terms())
      for (const auto& [v, cv] : b.terms()) {
        if ((int)(u.size() + v.size()) > r.n_) break;
        r.add(u, v, cu * cv);
      }
    return r;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_trunc(n_, o.n_);
    for (const auto& [k, c] : o.c_) add(k.first, k.second, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_trunc(n_, o.n_);
    for (const auto& [k, c] : o.c_) add(k.first, k.second, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const S& s, Tensor a) {
    for (auto& kv : a.c_) kv.second *= s;
    if (is_zero_scalar(s)) a.c_.clear();
    return a;
  }
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    require_same_trunc(a.n_, b.n_);
    Tensor r(a.n_);
    for (const auto& [x, cx] : a.c_) {
      int dx = (int)(x.first.size() + x.second.size());
      for (const auto& [y, cy] : b.c_) {
        if (dx + (int)(y.first.size() + y.second.size()) > a.n_) break;
        r.add(concat(x.first, y.first), concat(x.second, y.second), cx * cy);
      }
    }
    return r;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  // Largest |coefficient| (used for floating-point residuals).
  template <class F>
  S max_abs(F absf) const {
    S m(0);
    for (const auto& kv : c_) {
      S a = absf(kv.second);
      if (a > m) m = a;
    }
    return m;
  }

 private:
  int n_;
  Map c_;
};

// Power series in one variable t, coefficients 0..n.
template <class S>
struct Univariate {
  std::vector<S> c;
  explicit Univariate(int n = 0) : c(n + 1, S(0)) {}
  int trunc() const { return (int)c.size() - 1; }
};

}  // namespace dshuffle
