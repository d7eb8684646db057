#include <sstream>

#include "dshuffle/braids.hpp"

namespace dshuffle::braids {

using betti::GroupAlg;
using betti::GroupAlg2;

namespace {

// Artin action on the free group <x1,x2,x3> (generators 0,1,2).
std::vector<FreeWord> sigma_images(int i, int sign) {
  std::vector<FreeWord> img{{fgen(0)}, {fgen(1)}, {fgen(2)}};
  int a = i - 1, b = i;  // x_i, x_{i+1}
  if (sign > 0) {
    img[a] = {fgen(a), fgen(b), fgen(a, -1)};
    img[b] = {fgen(a)};
  } else {
    img[a] = {fgen(b)};
    img[b] = {fgen(b, -1), fgen(a), fgen(b)};
  }
  return img;
}

// Base letters of P5*: X0 = x23 and X1 = x12 act on the kernel through the
// inverse squares of the corresponding Artin generators.
std::vector<int> base_letter_braid(FLetter l) {
  int g = fletter_gen(l);
  int s = l > 0 ? -1 : 1;
  int sigma = g == betti::X1 ? 1 : 2;
  return {s * sigma, s * sigma};
}

struct AlphaTable {
  std::vector<FreeWord> img[5];  // index: base letter + 2
  AlphaTable() {
    for (FLetter l : {fgen(0), fgen(0, -1), fgen(1), fgen(1, -1)}) {
      std::vector<FreeWord> v;
      for (int k = 0; k < 3; ++k) v.push_back(artin_apply(base_letter_braid(l), FreeWord{fgen(k)}));
      img[l + 2] = v;
    }
  }
};

const AlphaTable& alpha_table() {
  static const AlphaTable t;
  return t;
}

}  // namespace

FreeWord artin_apply(const std::vector<int>& braid, const FreeWord& w) {
  FreeWord r = w;
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
    int s = *it;
    r = fw_apply(r, sigma_images(s > 0 ? s : -s, s > 0 ? 1 : -1));
  }
  return r;
}

FreeWord alpha(const FreeWord& base, const FreeWord& w) {
  const auto& t = alpha_table();
  FreeWord r = w;
  for (auto it = base.rbegin(); it != base.rend(); ++it) r = fw_apply(r, t.img[*it + 2]);
  return r;
}

bool P5Less::operator()(const P5Elem& a, const P5Elem& b) const {
  size_t da = a.ker.size() + a.base.size(), db = b.ker.size() + b.base.size();
  if (da != db) return da < db;
  if (a.ker != b.ker) return FreeLess{}(a.ker, b.ker);
  return FreeLess{}(a.base, b.base);
}

P5Elem p5_mul(const P5Elem& a, const P5Elem& b) {
  return {fw_mul(a.ker, alpha(a.base, b.ker)), fw_mul(a.base, b.base)};
}

P5Elem p5_inv(const P5Elem& a) {
  FreeWord vi = fw_inv(a.base);
  return {alpha(vi, fw_inv(a.ker)), vi};
}

P5Alg p5_alg_mul(const P5Alg& a, const P5Alg& b) {
  P5Alg r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r.add(p5_mul(x, y), cx * cy);
  return r;
}

P5Elem p5_kernel(int i) { return {FreeWord{fgen(i)}, FreeWord{}}; }

std::string p5_string(const P5Elem& g) {
  static const std::vector<std::string> kn{"x15", "x25", "x35"}, bn{"x23", "x12"};
  if (g.ker.empty() && g.base.empty()) return "1";
  if (g.base.empty()) return fw_string(g.ker, kn);
  if (g.ker.empty()) return fw_string(g.base, bn);
  return fw_string(g.ker, kn) + "*" + fw_string(g.base, bn);
}

std::string p5_alg_string(const P5Alg& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : a.terms()) {
    os << (first ? "" : " + ") << c.get_str() << "*" << p5_string(g);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

P5Alg ell_B(const GroupAlg& a) {
  P5Alg r;
  for (const auto& [w, c] : a.terms()) r.add(P5Elem{FreeWord{}, w}, c);
  return r;
}

// ---------- point erasure ----------

namespace {

// P4* generators that occur, as words in X0 = x23, X1 = x12.
// x13 is eliminated by the centre x12 x13 x23 = 1.
FreeWord p4_generator(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return {fgen(betti::X1)};
  if (a == 2 && b == 3) return {fgen(betti::X0)};
  if (a == 1 && b == 3) return {fgen(betti::X1, -1), fgen(betti::X0, -1)};
  throw std::logic_error("pr_B: generator x" + std::to_string(a) + std::to_string(b) + " not expressible");
}

struct PrBTables {
  std::vector<FreeWord> ker[6], base[6];
  PrBTables() {
    for (int i : {1, 2, 5}) {
      auto relabel = [&](int p) { return (p == 5 && i != 5) ? i : p; };
      auto image = [&](int a, int b) -> FreeWord {
        if (a == i || b == i) return {};
        return p4_generator(relabel(a), relabel(b));
      };
      for (int j = 1; j <= 3; ++j) ker[i].push_back(image(j, 5));
      base[i] = {image(2, 3), image(1, 2)};
    }
  }
};

const PrBTables& prb_tables() {
  static const PrBTables t;
  return t;
}

}  // namespace

const std::vector<FreeWord>& pr_B_kernel_images(int i) {
  if (i != 1 && i != 2 && i != 5) throw std::invalid_argument("pr_B: i must be 1, 2 or 5");
  return prb_tables().ker[i];
}
const std::vector<FreeWord>& pr_B_base_images(int i) {
  if (i != 1 && i != 2 && i != 5) throw std::invalid_argument("pr_B: i must be 1, 2 or 5");
  return prb_tables().base[i];
}

FreeWord pr_B(int i, const P5Elem& g) {
  return fw_mul(fw_apply(g.ker, pr_B_kernel_images(i)), fw_apply(g.base, pr_B_base_images(i)));
}

GroupAlg pr_B_alg(int i, const P5Alg& a) {
  GroupAlg r;
  for (const auto& [g, c] : a.terms()) r.add(pr_B(i, g), c);
  return r;
}

GroupAlg2 pr_B_12(const P5Alg& a) {
  GroupAlg2 r;
  for (const auto& [g, c] : a.terms()) r.add({pr_B(1, g), pr_B(2, g)}, c);
  return r;
}

// ---------- varpi_B ----------

namespace {

Matrix3<P5Alg> varpi_B_group(const P5Elem& g) {
  Matrix3<P5Alg> m;
  P5Elem gi = p5_inv(g);
  for (int i = 0; i < 3; ++i) {
    P5Elem u = p5_mul(p5_mul(gi, p5_kernel(i)), g);
    if (!u.base.empty()) throw std::logic_error("varpi_B: conjugate not in the kernel");
    // u - 1 = sum_t prefix_t (l_t - 1),  x^{-1} - 1 = -x^{-1}(x - 1)
    P5Alg c[3];
    FreeWord prefix;
    for (FLetter l : u.ker) {
      int j = fletter_gen(l);
      if (l > 0) {
        c[j].add(P5Elem{prefix, {}}, 1);
      } else {
        c[j].add(P5Elem{fw_mul(prefix, FreeWord{l}), {}}, -1);
      }
      fw_push(prefix, l);
    }
    P5Alg gg(g, Q(1));
    for (int j = 0; j < 3; ++j) m(i, j) = p5_alg_mul(gg, c[j]);
  }
  return m;
}

}  // namespace

Matrix3<P5Alg> varpi_B(const P5Alg& a) {
  Matrix3<P5Alg> r{};
  for (const auto& [g, c] : a.terms()) {
    Matrix3<P5Alg> m = varpi_B_group(g);
    for (int e = 0; e < 9; ++e) r.m[e] += c * m.m[e];
  }
  return r;
}

bool varpi_B_identity_holds(const P5Alg& a, const Matrix3<P5Alg>& m) {
  P5Alg one(P5Elem{}, Q(1));
  for (int i = 0; i < 3; ++i) {
    P5Alg lhs = p5_alg_mul(P5Alg(p5_kernel(i), Q(1)) - one, a);
    P5Alg rhs;
    for (int j = 0; j < 3; ++j) rhs += p5_alg_mul(m(i, j), P5Alg(p5_kernel(j), Q(1)) - one);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace dshuffle::braids
