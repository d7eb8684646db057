#include "dshuffle/betti_side.hpp"

#include <optional>
#include <sstream>

namespace dshuffle::betti {

namespace {
const std::vector<std::string> kNames{"X0", "X1"};

template <class Lc, class F>
std::string render(const Lc& a, F key) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c0] : a.terms()) {
    Q c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    std::string s = key(k);
    if (s == "1")
      os << c.get_str();
    else if (c == 1)
      os << s;
    else
      os << c.get_str() << "*" << s;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace

std::string f2_string(const FreeWord& w) { return fw_string(w, kNames); }
std::string group_alg_string(const GroupAlg& a) { return render(a, f2_string); }
std::string group_alg2_string(const GroupAlg2& t) {
  return render(t, [](const std::pair<FreeWord, FreeWord>& p) {
    return "(" + f2_string(p.first) + ")x(" + f2_string(p.second) + ")";
  });
}

GroupAlg ga_word(const FreeWord& w, const Q& c) { return GroupAlg(w, c); }
GroupAlg ga_one() { return GroupAlg(FreeWord{}, Q(1)); }

GroupAlg ga_mul(const GroupAlg& a, const GroupAlg& b) {
  GroupAlg r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r.add(fw_mul(x, y), cx * cy);
  return r;
}

GroupAlg2 ga2_mul(const GroupAlg2& a, const GroupAlg2& b) {
  GroupAlg2 r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      r.add({fw_mul(x.first, y.first), fw_mul(x.second, y.second)}, cx * cy);
  return r;
}

Q augmentation(const GroupAlg& a) {
  Q s = 0;
  for (const auto& kv : a.terms()) s += kv.second;
  return s;
}

// ---------- Magnus ----------

namespace {
struct MagnusImages {
  std::vector<Series<Q>> img;  // index: letter + 2 (letters -2,-1,1,2)
  explicit MagnusImages(int n) : img(5, Series<Q>(n)) {
    for (int g = 0; g < 2; ++g) {
      img[g + 1 + 2] = exp_series(Series<Q>::letter(g, n));
      img[-(g + 1) + 2] = exp_series(Series<Q>::monomial(Word{(Letter)g}, Q(-1), n));
    }
  }
};

class MagnusCache {
 public:
  explicit MagnusCache(int n) : im_(n) { cache_.emplace(FreeWord{}, Series<Q>::one(n)); }
  const Series<Q>& get(const FreeWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    FreeWord pre(w.begin(), w.end() - 1);
    Series<Q> v = get(pre) * im_.img[w.back() + 2];
    return cache_.emplace(w, std::move(v)).first->second;
  }

 private:
  MagnusImages im_;
  std::map<FreeWord, Series<Q>, FreeLess> cache_;
};
}  // namespace

Series<Q> magnus(const GroupAlg& a, int n) {
  MagnusCache mc(n);
  Series<Q> r(n);
  for (const auto& [w, c] : a.terms()) r += c * mc.get(w);
  return r;
}

Tensor<Q> magnus2(const GroupAlg2& t, int n) {
  MagnusCache mc(n);
  Tensor<Q> r(n);
  for (const auto& [k, c] : t.terms()) {
    const Series<Q> a = mc.get(k.first);
    const Series<Q>& b = mc.get(k.second);
    r += c * Tensor<Q>::product(a, b);
  }
  return r;
}

int filtration_degree(const GroupAlg& a) {
  if (a.is_zero()) throw std::invalid_argument("filtration_degree of zero");
  for (int n = 0; n <= 64; ++n) {
    Series<Q> s = magnus(a, n);
    if (!s.is_zero()) return s.order();
  }
  throw std::runtime_error("filtration_degree: order above 64");
}

Series<Q> magnus_symbol(const GroupAlg& a) {
  const int d = filtration_degree(a);
  return magnus(a, d).homogeneous(d);
}

GroupAlg2 delta_V_B(const GroupAlg& a) {
  GroupAlg2 r;
  for (const auto& [w, c] : a.terms()) r.add({w, w}, c);
  return r;
}

// ---------- YB generators ----------

int yb_filtration_degree(const YBMonomial& m) {
  int d = 0;
  for (const auto& l : m) d += l.kind ? l.n : 1;
  return d;
}

bool YBLess::operator()(const YBMonomial& a, const YBMonomial& b) const {
  int da = yb_filtration_degree(a), db = yb_filtration_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::string yb_string(const YBMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += "*";
    if (m[i].kind == 0) {
      s += "X1";
      if (m[i].n != 1) s += "^" + std::to_string(m[i].n);
    } else {
      s += "Y" + std::to_string(m[i].n) + (m[i].sign > 0 ? "+" : "-");
    }
  }
  return s;
}

std::string yb_elem_string(const YBElem& a) { return render(a, yb_string); }

static YBMonomial yb_mono_mul(const YBMonomial& a, const YBMonomial& b) {
  YBMonomial r = a;
  for (const auto& l : b) {
    if (l.kind == 0 && !r.empty() && r.back().kind == 0) {
      r.back().n += l.n;
      if (r.back().n == 0) r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

YBElem yb_mul(const YBElem& a, const YBElem& b) {
  YBElem r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r.add(yb_mono_mul(x, y), cx * cy);
  return r;
}

YBElem yb_x1(int n) {
  if (n == 0) return YBElem(YBMonomial{}, Q(1));
  return YBElem(YBMonomial{YBLetter{0, n, 0}}, Q(1));
}

YBElem yb_y(int n, int sign) { return YBElem(YBMonomial{YBLetter{1, n, sign}}, Q(1)); }

GroupAlg y_generator(int n, int sign) {
  if (n < 1) throw std::invalid_argument("Y_n needs n >= 1");
  GroupAlg x0 = ga_word(fw_pow(X0, sign));
  GroupAlg r = ga_one();
  for (int i = 0; i < n - 1; ++i) r = ga_mul(r, x0 - ga_one());
  r = ga_mul(r, x0);
  return ga_mul(r, ga_one() - ga_word(fw_pow(X1, sign)));
}

static GroupAlg yb_letter_expand(const YBLetter& l) {
  if (l.kind == 0) return ga_word(fw_pow(X1, l.n));
  return y_generator(l.n, l.sign);
}

GroupAlg yb_expand(const YBElem& a) {
  GroupAlg r;
  for (const auto& [m, c] : a.terms()) {
    GroupAlg t = ga_one();
    for (const auto& l : m) t = ga_mul(t, yb_letter_expand(l));
    r += c * t;
  }
  return r;
}

GroupAlg2 yb_expand2(const YBElem2& t) {
  GroupAlg2 r;
  for (const auto& [k, c] : t.terms())
    r += c * tensor_product(yb_expand(YBElem(k.first, Q(1))), yb_expand(YBElem(k.second, Q(1))));
  return r;
}

namespace {

// X1^m - 1 = (X1 - 1) q_m(X1)
YBElem q_poly(int m) {
  YBElem r;
  if (m > 0)
    for (int k = 0; k < m; ++k) r += yb_x1(k);
  else
    for (int k = m; k < 0; ++k) r -= yb_x1(k);
  return r;
}

// Z_k = X0^k (X1 - 1)
YBElem z_elem(int k) {
  YBElem r;
  int a = k > 0 ? k : -k;
  mpz_class binom = 1;
  for (int j = 0; j <= a - 1; ++j) {
    if (j) binom = binom * (a - j) / j;
    r += Q(binom) * yb_y(j + 1, k > 0 ? 1 : -1);
  }
  if (k > 0) return -r;
  return yb_mul(r, yb_x1(1));
}

FreeWord drop_last_syllable(const FreeWord& w) {
  FreeWord r = w;
  int g = fletter_gen(r.back());
  while (!r.empty() && fletter_gen(r.back()) == g) r.pop_back();
  return r;
}

// R(g) = g (X1 - 1) written in the generators
const YBElem& r_elem(const FreeWord& g) {
  thread_local std::map<FreeWord, YBElem, FreeLess> cache;
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  YBElem res;
  auto syl = fw_syllables(g);
  int m = 0;
  FreeWord h = g;
  if (!syl.empty() && syl.back().first == X1) {
    m = syl.back().second;
    h = drop_last_syllable(g);
    syl.pop_back();
  }
  if (syl.empty()) {
    res = yb_x1(m + 1) - yb_x1(m);
  } else {
    int k = syl.back().second;  // X0-syllable
    FreeWord u = drop_last_syllable(h);
    if (u.empty()) {
      res = yb_mul(z_elem(k), yb_x1(m));
    } else {
      int mp = fw_syllables(u).back().second;  // u ends in X1^{mp}
      FreeWord up = drop_last_syllable(u);
      FreeWord upk = fw_mul(up, fw_pow(X0, k));
      YBElem a = yb_mul(r_elem(upk), yb_x1(m));
      YBElem b = yb_mul(yb_mul(yb_mul(r_elem(up), q_poly(mp)), z_elem(k)), yb_x1(m));
      res = a + b;
    }
  }
  return cache.emplace(g, std::move(res)).first->second;
}

struct Division {
  Q constant;
  GroupAlg quotient;  // a = constant + quotient (X1 - 1)
  bool ok = true;
};

Division right_divide(const GroupAlg& a) {
  Division d;
  d.constant = 0;
  std::map<FreeWord, std::map<int, Q>, FreeLess> f;
  for (const auto& [w, c] : a.terms()) {
    auto syl = fw_syllables(w);
    int m = 0;
    FreeWord p = w;
    if (!syl.empty() && syl.back().first == X1) {
      m = syl.back().second;
      p = drop_last_syllable(w);
    }
    if (p.empty()) d.constant += c;
    f[p][m] += c;
  }
  f[FreeWord{}][0] -= d.constant;
  for (const auto& [p, fp] : f) {
    Q s = 0;
    for (const auto& kv : fp) s += kv.second;
    if (s != 0) {
      d.ok = false;
      return d;
    }
    Q q = 0;
    for (auto it = fp.begin(); it != fp.end(); ++it) {
      q -= it->second;
      auto nx = std::next(it);
      if (nx == fp.end()) break;
      // q now equals q_k for every k in [it->first, nx->first)
      for (int k = it->first; k < nx->first; ++k) d.quotient.add(fw_mul(p, fw_pow(X1, k)), q);
    }
  }
  return d;
}

}  // namespace

bool in_WB(const GroupAlg& a) { return right_divide(a).ok; }

YBElem to_WB_generators(const GroupAlg& a) {
  Division d = right_divide(a);
  if (!d.ok) throw std::invalid_argument("to_WB_generators: element not in W^B");
  YBElem r(YBMonomial{}, d.constant);
  for (const auto& [g, c] : d.quotient.terms()) r += c * r_elem(g);
  if (!(yb_expand(r) == a)) throw std::logic_error("to_WB_generators: round trip failed");
  return r;
}

static YBElem2 delta_yb_letter(const YBLetter& l) {
  YBElem2 r;
  if (l.kind == 0) {
    r.add({YBMonomial{l}, YBMonomial{l}}, Q(1));
    return r;
  }
  for (int i = 0; i <= l.n; ++i) {
    YBMonomial a, b;
    if (i) a.push_back(YBLetter{1, i, l.sign});
    if (l.n - i) b.push_back(YBLetter{1, l.n - i, l.sign});
    r.add({a, b}, Q(1));
  }
  return r;
}

YBElem2 delta_W_B(const YBElem& a) {
  auto mul = [](const YBMonomial& x, const YBMonomial& y) {
    return YBElem(yb_mono_mul(x, y), Q(1));
  };
  YBElem2 r;
  for (const auto& [m, c] : a.terms()) {
    YBElem2 t;
    t.add({YBMonomial{}, YBMonomial{}}, Q(1));
    for (const auto& l : m) t = tensor_mul(t, delta_yb_letter(l), mul);
    r += c * t;
  }
  return r;
}

// ---------- M^B ----------

static FreeWord drop_trailing_x0(const FreeWord& w) {
  if (!w.empty() && fletter_gen(w.back()) == X0) return drop_last_syllable(w);
  return w;
}

GroupAlg mB_class(const GroupAlg& v) {
  GroupAlg r;
  for (const auto& [w, c] : v.terms()) r.add(drop_trailing_x0(w), c);
  return r;
}

GroupAlg2 mB_class2(const GroupAlg2& t) {
  GroupAlg2 r;
  for (const auto& [k, c] : t.terms()) r.add({drop_trailing_x0(k.first), drop_trailing_x0(k.second)}, c);
  return r;
}

// L(w) in W^B with L(w) 1_B = w 1_B
static GroupAlg lift_word(const FreeWord& w0) {
  GroupAlg r;
  FreeWord w = drop_trailing_x0(w0);
  while (!w.empty()) {
    int m = fw_syllables(w).back().second;  // trailing X1^m
    FreeWord u = drop_last_syllable(w);
    // u X1^m 1 = u 1 + u (X1 - 1) q_m(X1) 1
    r += ga_mul(ga_mul(ga_word(u), ga_word(fw_pow(X1, 1)) - ga_one()), yb_expand(q_poly(m)));
    w = drop_trailing_x0(u);
  }
  r += ga_one();
  return r;
}

GroupAlg wB_of_mB(const GroupAlg& m) {
  GroupAlg r;
  for (const auto& [w, c] : m.terms()) r += c * lift_word(w);
  return r;
}

GroupAlg2 delta_M_B(const GroupAlg& m) {
  GroupAlg a = wB_of_mB(mB_class(m));
  return mB_class2(yb_expand2(delta_W_B(to_WB_generators(a))));
}

// ---------- localization ----------

bool LocBLess::operator()(const LocBWord& a, const LocBWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

int algebra_of(const LFactor& f) { return f.kind == 0 ? 0 : 1; }

// A2 element: Laurent part (exponent -> coeff, 0 is the scalar) and polar part
struct A2 {
  std::map<int, Q> lau, pol;
  void add_pol(int m, const Q& c) {
    if (m == 0)
      lau[0] += c;
    else
      pol[m] += c;
  }
};

A2 times_t(const A2& x, int sign) {
  A2 r;
  for (const auto& [e, c] : x.lau) r.lau[e + sign] += c;
  for (const auto& [m, c] : x.pol) {
    if (sign > 0) {  // t (t-1)^{-m} = (t-1)^{-m} + (t-1)^{-(m-1)}
      r.add_pol(m, c);
      r.add_pol(m - 1, c);
    } else {  // t^{-1}(t-1)^{-m} = sum_{j=1}^m (-1)^{m-j} (t-1)^{-j} + (-1)^m t^{-1}
      for (int j = 1; j <= m; ++j) r.add_pol(j, (m - j) % 2 ? Q(-c) : c);
      r.lau[-1] += (m % 2) ? Q(-c) : c;
    }
  }
  return r;
}

// product of two basis factors of the same algebra: list of (factor or scalar, coeff)
std::vector<std::pair<std::optional<LFactor>, Q>> factor_mul(const LFactor& a, const LFactor& b) {
  std::vector<std::pair<std::optional<LFactor>, Q>> out;
  auto push = [&](int kind, int e, const Q& c) {
    if (c == 0) return;
    bool scalar = (kind != 2 && e == 0);
    out.push_back({scalar ? std::nullopt : std::optional<LFactor>(LFactor{kind, e}), c});
  };
  if (a.kind == 0) {
    push(0, a.e + b.e, 1);
    return out;
  }
  if (a.kind == 1 && b.kind == 1) {
    push(1, a.e + b.e, 1);
    return out;
  }
  if (a.kind == 2 && b.kind == 2) {
    push(2, a.e + b.e, 1);
    return out;
  }
  int texp = a.kind == 1 ? a.e : b.e;
  int m = a.kind == 2 ? a.e : b.e;
  A2 x;
  x.pol[m] = 1;
  for (int i = 0; i < (texp > 0 ? texp : -texp); ++i) x = times_t(x, texp > 0 ? 1 : -1);
  for (const auto& [e, c] : x.lau) push(1, e, c);
  for (const auto& [p, c] : x.pol) push(2, p, c);
  return out;
}

void word_mul_rec(const LocBWord& a, size_t na, const LocBWord& b, size_t sb, const Q& coef,
                  LocBElem& out) {
  if (na == 0 || sb == b.size() || algebra_of(a[na - 1]) != algebra_of(b[sb])) {
    LocBWord w(a.begin(), a.begin() + na);
    w.insert(w.end(), b.begin() + sb, b.end());
    out.add(w, coef);
    return;
  }
  for (const auto& [f, c] : factor_mul(a[na - 1], b[sb])) {
    if (f) {
      LocBWord w(a.begin(), a.begin() + (na - 1));
      w.push_back(*f);
      w.insert(w.end(), b.begin() + sb + 1, b.end());
      out.add(w, coef * c);
    } else {
      word_mul_rec(a, na - 1, b, sb + 1, coef * c, out);
    }
  }
}

}  // namespace

LocBElem loc_word_mul_B(const LocBWord& a, const LocBWord& b) {
  LocBElem r;
  word_mul_rec(a, a.size(), b, 0, Q(1), r);
  return r;
}

LocBElem loc_mul_B(const LocBElem& a, const LocBElem& b) { return bilinear(a, b, loc_word_mul_B); }

LocBTensor loc_tensor_mul_B(const LocBTensor& a, const LocBTensor& b) {
  return tensor_mul(a, b, loc_word_mul_B);
}

static LocBWord loc_B_word(const FreeWord& w) {
  LocBWord r;
  for (auto [g, e] : fw_syllables(w)) r.push_back(LFactor{g == X0 ? 0 : 1, e});
  return r;
}

LocBElem loc_B_from(const GroupAlg& a) {
  LocBElem r;
  for (const auto& [w, c] : a.terms()) r.add(loc_B_word(w), c);
  return r;
}

LocBTensor loc_B_tensor_from(const GroupAlg2& t) {
  LocBTensor r;
  for (const auto& [k, c] : t.terms()) r.add({loc_B_word(k.first), loc_B_word(k.second)}, c);
  return r;
}

LocBElem loc_B_pole(int m) { return LocBElem(LocBWord{LFactor{2, m}}, Q(1)); }

static LocBWord drop_trailing_a1(const LocBWord& w) {
  if (!w.empty() && w.back().kind == 0) return LocBWord(w.begin(), w.end() - 1);
  return w;
}

LocBTensor loc_B_mclass2(const LocBTensor& t) {
  LocBTensor r;
  for (const auto& [k, c] : t.terms()) r.add({drop_trailing_a1(k.first), drop_trailing_a1(k.second)}, c);
  return r;
}

std::string loc_B_word_string(const LocBWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    const auto& f = w[i];
    if (f.kind == 2)
      s += "(X1-1)^-" + std::to_string(f.e);
    else
      s += std::string(f.kind == 0 ? "X0" : "X1") + (f.e != 1 ? "^" + std::to_string(f.e) : "");
  }
  return s;
}

std::string loc_B_tensor_string(const LocBTensor& t) {
  return render(t, [](const std::pair<LocBWord, LocBWord>& p) {
    return "(" + loc_B_word_string(p.first) + ")x(" + loc_B_word_string(p.second) + ")";
  });
}

// ---------- yhat ----------

Series<Q> yhat_generator(int k, int n) { return magnus(y_generator(k, 1), n); }

namespace {
class YHatCache {
 public:
  explicit YHatCache(int n) : n_(n) { cache_.emplace(dr::YMonomial{}, Series<Q>::one(n)); }
  const Series<Q>& get(const dr::YMonomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    dr::YMonomial pre(m.begin(), m.end() - 1);
    // resolve the prefix first: it may grow gens_
    const Series<Q>& head = get(pre);
    if ((int)gens_.size() < m.back() + 1) gens_.resize(m.back() + 1);
    if (gens_[m.back()].trunc() != n_ || gens_[m.back()].is_zero())
      gens_[m.back()] = yhat_generator(m.back(), n_);
    Series<Q> v = head * gens_[m.back()];
    return cache_.emplace(m, std::move(v)).first->second;
  }

 private:
  int n_;
  std::vector<Series<Q>> gens_;
  std::map<dr::YMonomial, Series<Q>> cache_;
};
}  // namespace

Series<Q> yhat_expand(const YHat& a) {
  YHatCache yc(a.n);
  Series<Q> r(a.n);
  for (const auto& [m, c] : a.c.terms()) r += c * yc.get(m);
  return r;
}

// The leading term of the yhat-monomial y_{k1}..y_{km} is y_word with sign (-1)^m,
// so the coefficients can be peeled off degree by degree.
YHat to_yhat_basis(const Series<Q>& a) {
  const int n = a.trunc();
  YHatCache yc(n);
  YHat out;
  out.n = n;
  Series<Q> r = a;
  for (int d = 0; d <= n; ++d) {
    Series<Q> h = r.homogeneous(d);
    for (const auto& [w, c] : h.terms()) {
      dr::YMonomial m;
      if (!dr::word_to_ymonomial(w, m))
        throw std::invalid_argument("to_yhat_basis: residual word " + word_string(w) +
                                    " outside k + V e1 at degree " + std::to_string(d));
      Q cm = (m.size() % 2) ? Q(-c) : c;
      out.c.add(m, cm);
      r -= cm * yc.get(m);
    }
  }
  if (!r.is_zero()) throw std::logic_error("to_yhat_basis: nonzero residual");
  return out;
}

Tensor<Q> delta_W_B_hat(const Series<Q>& a) {
  const int n = a.trunc();
  YHat yh = to_yhat_basis(a);
  YHatCache yc(n);
  Tensor<Q> r(n);
  for (const auto& [m, c] : yh.c.terms()) {
    auto dm = dr::delta_W_DR_monomial<Q>(m);
    for (const auto& [k, ck] : dm.terms())
      r += (c * ck) * Tensor<Q>::product(yc.get(k.first), yc.get(k.second));
  }
  return r;
}

}  // namespace dshuffle::betti
