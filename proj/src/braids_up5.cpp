#include <algorithm>
#include <mutex>
#include <sstream>

#include "dshuffle/braids.hpp"

namespace dshuffle::braids {

namespace {

std::pair<int, int> norm(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

const std::vector<std::pair<int, int>> kP5Free{{1, 5}, {2, 5}, {3, 5}, {2, 3}, {1, 2}};
const std::vector<std::pair<int, int>> kP4Free{{2, 3}, {1, 2}};

}  // namespace

const std::vector<Q>& Elimination::of(int i, int j) const {
  auto it = coords.find(norm(i, j));
  if (it == coords.end()) throw std::out_of_range("no generator e" + std::to_string(i) + std::to_string(j));
  return it->second;
}

Elimination eliminate_sum_relations(int points, const std::vector<std::pair<int, int>>& free_gens) {
  Elimination el;
  el.points = points;
  el.free_gens = free_gens;
  std::vector<std::pair<int, int>> cols;
  for (int i = 1; i <= points; ++i)
    for (int j = i + 1; j <= points; ++j)
      if (std::find(free_gens.begin(), free_gens.end(), std::pair{i, j}) == free_gens.end())
        cols.push_back({i, j});
  const int ndep = (int)cols.size();
  cols.insert(cols.end(), free_gens.begin(), free_gens.end());
  auto col_of = [&](int i, int j) {
    return (int)(std::find(cols.begin(), cols.end(), norm(i, j)) - cols.begin());
  };
  Echelon ech;
  for (int i = 1; i <= points; ++i) {
    SparseVec rel;
    for (int j = 1; j <= points; ++j)
      if (j != i) rel[col_of(i, j)] = 1;
    ech.insert(rel);
  }
  for (int c = 0; c < (int)cols.size(); ++c) {
    SparseVec v{{c, Q(1)}};
    SparseVec r = ech.reduce(v);
    std::vector<Q> co(free_gens.size(), Q(0));
    for (const auto& [k, x] : r) {
      if (k < ndep) throw std::logic_error("sum relations do not eliminate the chosen generators");
      co[k - ndep] = x;
    }
    el.coords[cols[c]] = co;
  }
  return el;
}

// ---------- oracle ----------

namespace {

int pow5(int d) {
  int r = 1;
  while (d--) r *= 5;
  return r;
}

bool is_pbw_word(const Word& w) {
  bool seen_base = false;
  for (Letter l : w) {
    if (l >= 3)
      seen_base = true;
    else if (seen_base)
      return false;
  }
  return true;
}

int column_of(const Word& w) {
  int v = 0;
  for (Letter l : w) v = 5 * v + l;
  return (is_pbw_word(w) ? pow5((int)w.size()) : 0) + v;
}

Word word_of_column(int c, int d) {
  int base = pow5(d);
  if (c >= base) c -= base;
  Word w(d);
  for (int i = d - 1; i >= 0; --i) {
    w[i] = c % 5;
    c /= 5;
  }
  return w;
}

const Elimination& p5_elim() {
  static const Elimination e = eliminate_sum_relations(5, kP5Free);
  return e;
}

const Elimination& p4_elim() {
  static const Elimination e = eliminate_sum_relations(4, kP4Free);
  return e;
}

FreeAlg free_mul(const FreeAlg& a, const FreeAlg& b) {
  FreeAlg r;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add(concat(u, v), cu * cv);
  return r;
}

std::vector<FreeAlg> quadratic_relations() {
  std::vector<FreeAlg> rels;
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) gens.push_back({i, j});
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b) {
      auto [i, j] = gens[a];
      auto [k, l] = gens[b];
      if (i == k || i == l || j == k || j == l) continue;
      FreeAlg x = oracle_generator(i, j), y = oracle_generator(k, l);
      rels.push_back(free_mul(x, y) - free_mul(y, x));
    }
  return rels;
}

const Echelon& relation_span(int d) {
  if (d < 0 || d > 4) throw std::invalid_argument("oracle degree must be <= 4");
  static std::mutex mu;
  static std::map<int, Echelon> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Echelon ech;
  if (d >= 2) {
    auto rels = quadratic_relations();
    for (int left = 0; left <= d - 2; ++left) {
      int right = d - 2 - left;
      for (int lu = 0; lu < pow5(left); ++lu)
        for (int rv = 0; rv < pow5(right); ++rv) {
          Word u = word_of_column(lu, left), v = word_of_column(rv, right);
          for (const auto& q : rels) {
            SparseVec row;
            for (const auto& [w, c] : q.terms()) row[column_of(concat(concat(u, w), v))] += c;
            ech.insert(row);
          }
        }
    }
  }
  return cache.emplace(d, std::move(ech)).first->second;
}

}  // namespace

FreeAlg oracle_generator(int i, int j) {
  const auto& co = p5_elim().of(i, j);
  FreeAlg r;
  for (int k = 0; k < 5; ++k) r.add(Word{(Letter)k}, co[k]);
  return r;
}

FreeAlg up5_as_free(const UPKey& k) {
  Word w = k.first;
  for (Letter b : k.second) w.push_back(3 + b);
  return FreeAlg(w, Q(1));
}

UP5 up5_oracle_reduce(const FreeAlg& a, int d, int n) {
  SparseVec v;
  for (const auto& [w, c] : a.terms()) {
    if ((int)w.size() != d) throw std::invalid_argument("oracle input not homogeneous of degree d");
    v[column_of(w)] += c;
  }
  for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
  SparseVec r = relation_span(d).reduce(v);
  UP5 out(n);
  for (const auto& [c, x] : r) {
    Word w = word_of_column(c, d);
    if (!is_pbw_word(w)) throw std::logic_error("oracle normal form outside the PBW basis");
    Word k, b;
    for (Letter l : w) (l < 3 ? k : b).push_back(l < 3 ? l : l - 3);
    out.add({k, b}, x);
  }
  return out;
}

int oracle_quotient_dimension(int d) { return pow5(d) - (int)relation_span(d).rank(); }

// ---------- action table ----------

namespace {
struct ActionTable {
  KernelPoly d[2][3];
  ActionTable() {
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 3; ++i) {
        FreeAlg x(Word{(Letter)(3 + b)}, Q(1)), k(Word{(Letter)i}, Q(1));
        UP5 red = up5_oracle_reduce(free_mul(x, k), 2, 2);
        // b k = k b + [b, k]
        red -= UP5::kernel(i, 2) * UP5::base(b, 2);  // safe: kernel * base needs no table
        for (const auto& [key, c] : red.terms().terms()) {
          if (!key.second.empty() || key.first.size() != 2)
            throw std::logic_error("action table: bracket is not kernel-quadratic");
          d[b][i].add(key.first, c);
        }
      }
  }
};
}  // namespace

const KernelPoly& action_table(int b, int i) {
  static const ActionTable t;
  return t.d[b][i];
}

// ---------- UP5 ----------

bool UPLess::operator()(const UPKey& a, const UPKey& b) const {
  size_t da = a.first.size() + a.second.size(), db = b.first.size() + b.second.size();
  if (da != db) return da < db;
  LenLex ll;
  if (a.first != b.first) return ll(a.first, b.first);
  return ll(a.second, b.second);
}

void UP5::add(const UPKey& k, const Q& c) {
  if ((int)(k.first.size() + k.second.size()) > n_) return;
  c_.add(k, c);
}

UP5 UP5::one(int n) {
  UP5 r(n);
  r.add({Word{}, Word{}}, 1);
  return r;
}
UP5 UP5::kernel(int i, int n) {
  UP5 r(n);
  r.add({Word{(Letter)i}, Word{}}, 1);
  return r;
}
UP5 UP5::base(int b, int n) {
  UP5 r(n);
  r.add({Word{}, Word{(Letter)b}}, 1);
  return r;
}
UP5 UP5::generator(int i, int j, int n) {
  const auto& co = p5_elim().of(i, j);
  UP5 r(n);
  for (int k = 0; k < 3; ++k) r.add({Word{(Letter)k}, Word{}}, co[k]);
  r.add({Word{}, Word{0}}, co[3]);
  r.add({Word{}, Word{1}}, co[4]);
  return r;
}

UP5& UP5::operator+=(const UP5& o) {
  require_same_trunc(n_, o.n_);
  c_ += o.c_;
  return *this;
}
UP5& UP5::operator-=(const UP5& o) {
  require_same_trunc(n_, o.n_);
  c_ -= o.c_;
  return *this;
}
UP5 operator*(const Q& s, UP5 a) {
  a.c_ *= s;
  return a;
}

int UP5::max_degree() const {
  int d = -1;
  for (const auto& kv : c_.terms()) d = std::max(d, (int)(kv.first.first.size() + kv.first.second.size()));
  return d;
}

namespace {

using UPComb = LinComb<UPKey, Q, UPLess>;

// derivation D_b on a kernel word
KernelPoly derive(int b, const Word& k) {
  KernelPoly r;
  for (size_t p = 0; p < k.size(); ++p) {
    Word pre(k.begin(), k.begin() + p), post(k.begin() + p + 1, k.end());
    for (const auto& [w, c] : action_table(b, k[p]).terms()) r.add(concat(concat(pre, w), post), c);
  }
  return r;
}

// base word B times kernel word k, in normal form
const UPComb& move_past(const Word& bw, const Word& k) {
  thread_local std::map<UPKey, UPComb> cache;
  UPKey key{bw, k};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  UPComb r;
  if (bw.empty() || k.empty()) {
    r.add({k, bw}, 1);
  } else {
    Letter beta = bw.back();
    Word pre(bw.begin(), bw.end() - 1);
    for (const auto& [x, c] : move_past(pre, k).terms()) {
      Word b2 = x.second;
      b2.push_back(beta);
      r.add({x.first, b2}, c);
    }
    KernelPoly dk = derive(beta, k);
    for (const auto& [w, c] : dk.terms())
      for (const auto& [x, cx] : move_past(pre, w).terms()) r.add(x, c * cx);
  }
  return cache.emplace(key, std::move(r)).first->second;
}

}  // namespace

UP5 operator*(const UP5& a, const UP5& b) {
  require_same_trunc(a.n_, b.n_);
  UP5 r(a.n_);
  for (const auto& [x, cx] : a.c_.terms()) {
    int dx = (int)(x.first.size() + x.second.size());
    for (const auto& [y, cy] : b.c_.terms()) {
      if (dx + (int)(y.first.size() + y.second.size()) > a.n_) break;
      Q c = cx * cy;
      for (const auto& [z, cz] : move_past(x.second, y.first).terms())
        r.add({concat(x.first, z.first), concat(z.second, y.second)}, c * cz);
    }
  }
  return r;
}

std::string up5_key_string(const UPKey& k) {
  static const char* kn[] = {"e15", "e25", "e35"};
  static const char* bn[] = {"e23", "e12"};
  if (k.first.empty() && k.second.empty()) return "1";
  std::string s;
  for (Letter l : k.first) s += (s.empty() ? "" : "*") + std::string(kn[l]);
  for (Letter l : k.second) s += (s.empty() ? "" : "*") + std::string(bn[l]);
  return s;
}

std::string up5_string(const UP5& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms().terms()) {
    os << (first ? "" : " + ") << c.get_str() << "*" << up5_key_string(k);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------- morphisms ----------

UP5 ell(const Series<Q>& a) {
  UP5 r(a.trunc());
  for (const auto& [w, c] : a.terms()) r.add({Word{}, w}, c);
  return r;
}

Series<Q> pr_generator(int i, int a, int b, int n) {
  Series<Q> r(n);
  if (a == i || b == i) return r;
  auto relabel = [&](int p) { return (p == 5 && i != 5) ? i : p; };
  const auto& co = p4_elim().of(relabel(a), relabel(b));
  r.add(Word{0}, co[0]);
  r.add(Word{1}, co[1]);
  return r;
}

namespace {
// images of kernel letters 0..2 and base letters 0..1 (as letters 3,4)
std::vector<Series<Q>> pr_letter_images(int i, int n) {
  return {pr_generator(i, 1, 5, n), pr_generator(i, 2, 5, n), pr_generator(i, 3, 5, n),
          pr_generator(i, 2, 3, n), pr_generator(i, 1, 2, n)};
}

Series<Q> flatten_to_v(const UP5& a, const std::vector<Series<Q>>& img) {
  // a monomial (k, b) is the product of its letters; reuse the substitution
  // machinery on the flattened word over five letters
  Series<Q> flat(a.trunc());
  for (const auto& [k, c] : a.terms().terms()) {
    Word w = k.first;
    for (Letter l : k.second) w.push_back(3 + l);
    flat.add(w, c);  // letters 0..4 used as plain labels
  }
  return substitute(flat, img);
}
}  // namespace

Series<Q> pr(int i, const UP5& a) { return flatten_to_v(a, pr_letter_images(i, a.trunc())); }

Tensor<Q> pr12(const UP5& a) {
  const int n = a.trunc();
  auto i1 = pr_letter_images(1, n), i2 = pr_letter_images(2, n);
  Series<Q> one = Series<Q>::one(n);
  std::vector<Tensor<Q>> img;
  for (int l = 0; l < 5; ++l)
    img.push_back(Tensor<Q>::product(i1[l], one) + Tensor<Q>::product(one, i2[l]));
  Series<Q> flat(n);
  for (const auto& [k, c] : a.terms().terms()) {
    Word w = k.first;
    for (Letter l : k.second) w.push_back(3 + l);
    flat.add(w, c);
  }
  return substitute_tensor(flat, img);
}

// ---------- varpi ----------

namespace {

Matrix3<UP5> zero_matrix(int n) {
  Matrix3<UP5> m;
  m.m.fill(UP5(n));
  return m;
}

// letter 0..2: kernel e_{l+1,5}; 3,4: base e23, e12
Matrix3<UP5> varpi_letter(int l, int n) {
  Matrix3<UP5> m = zero_matrix(n);
  if (l < 3) {
    for (int i = 0; i < 3; ++i) m(i, l) = UP5::kernel(i, n);
    return m;
  }
  int b = l - 3;
  // e_{i5} b = b e_{i5} - [b, e_{i5}],  [b, e_{i5}] = sum L_{(a,c)} e_{a5} e_{c5}
  for (int i = 0; i < 3; ++i) {
    m(i, i) += UP5::base(b, n);
    for (const auto& [w, c] : action_table(b, i).terms()) m(i, w[1]) -= c * UP5::kernel(w[0], n);
  }
  return m;
}

}  // namespace

Matrix3<UP5> varpi(const UP5& a) {
  const int n = a.trunc();
  auto mul = [](const UP5& x, const UP5& y) { return x * y; };
  std::vector<Matrix3<UP5>> gens;
  for (int l = 0; l < 5; ++l) gens.push_back(varpi_letter(l, n));
  Matrix3<UP5> id = zero_matrix(n);
  for (int i = 0; i < 3; ++i) id(i, i) = UP5::one(n);
  std::map<Word, Matrix3<UP5>, LenLex> cache{{Word{}, id}};
  Matrix3<UP5> r = zero_matrix(n);
  for (const auto& [k, c] : a.terms().terms()) {
    Word w = k.first;
    for (Letter l : k.second) w.push_back(3 + l);
    Word pre;
    const Matrix3<UP5>* cur = &cache.at(Word{});
    for (Letter l : w) {
      pre.push_back(l);
      auto it = cache.find(pre);
      if (it == cache.end()) it = cache.emplace(pre, mat_mul(*cur, gens[l], mul, UP5(n))).first;
      cur = &it->second;
    }
    for (int e = 0; e < 9; ++e) r.m[e] += c * cur->m[e];
  }
  return r;
}

bool varpi_identity_holds(const UP5& a, const Matrix3<UP5>& m) {
  const int n = a.trunc();
  for (int i = 0; i < 3; ++i) {
    UP5 rhs(n);
    for (int j = 0; j < 3; ++j) rhs += m(i, j) * UP5::kernel(j, n);
    if (!(UP5::kernel(i, n) * a == rhs)) return false;
  }
  return true;
}

}  // namespace dshuffle::braids
