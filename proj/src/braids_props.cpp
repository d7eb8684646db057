#include <sstream>

#include "dshuffle/braids.hpp"

namespace dshuffle::braids {

using betti::GroupAlg;
using betti::GroupAlg2;
using betti::LocBElem;
using betti::LocBTensor;
using betti::LocBWord;
using betti::LFactor;
using dr::LocTensor;
using dr::LocWord;

namespace {

LocTensor lt(const LocWord& a, const LocWord& b, const Q& c) {
  LocTensor t;
  t.add({a, b}, c);
  return t;
}

int max_degree(const Series<Q>& a) {
  int d = 0;
  for (const auto& kv : a.terms()) d = std::max(d, (int)kv.first.size());
  return d;
}

GroupAlg x1m(int e) { return betti::ga_word(fw_pow(betti::X1, e)); }
const GroupAlg& one() {
  static const GroupAlg o = betti::ga_one();
  return o;
}

LocBTensor lb(const GroupAlg& a, const GroupAlg& b) {
  return betti::loc_B_tensor_from(tensor_product(a, b));
}
LocBTensor lb(const LocBElem& a, const LocBElem& b) { return tensor_product(a, b); }

template <class T, class Mul>
T row_matrix_col(const std::array<T, 3>& row, const std::array<std::array<T, 3>, 3>& m,
                 const std::array<T, 3>& col, Mul mul) {
  T r;
  for (int j = 0; j < 3; ++j) {
    if (row[j].is_zero()) continue;
    for (int k = 0; k < 3; ++k) {
      if (col[k].is_zero() || m[j][k].is_zero()) continue;
      r += mul(mul(row[j], m[j][k]), col[k]);
    }
  }
  return r;
}

}  // namespace

RowColDR make_row_col_DR() {
  const LocWord e1{{1, 1}}, e1inv{{1, -1}}, u{};
  RowColDR rc;
  rc.row1 = {lt(u, e1inv, 1), lt(e1inv, u, -1), LocTensor{}};
  rc.col1 = {lt(e1, e1, 1), lt(e1, e1, -1), LocTensor{}};
  rc.col0 = {LocTensor{}, lt(e1, u, -1), lt(e1, u, 1)};
  return rc;
}

RowColB printed_row_col_B() {
  LocBElem pole = betti::loc_B_pole(1);
  LocBElem u = betti::loc_B_from(one());
  RowColB rc;
  // (1 - X1^{-1})^{-1} = 1 + (X1-1)^{-1},  (1 - X1)^{-1} = -(X1-1)^{-1}
  rc.row1 = {lb(u, u + pole), lb(Q(-1) * pole, u), LocBTensor{}};
  rc.col1 = {lb(x1m(1) - one(), x1m(1) - one()), lb(x1m(1) - one(), x1m(-1) - one()), LocBTensor{}};
  rc.col0 = {LocBTensor{}, lb(one() - x1m(1), x1m(-1)), lb(one() - x1m(-1), x1m(-1))};
  return rc;
}

RowColB working_row_col_B() {
  LocBElem pole = betti::loc_B_pole(1);
  LocBElem u = betti::loc_B_from(one());
  RowColB rc;
  rc.row1 = {lb(u, pole), lb(Q(-1) * pole, u), LocBTensor{}};
  rc.col1 = {lb(x1m(1) - one(), betti::ga_mul(x1m(1), x1m(1) - one())),
             lb(one() - x1m(1), x1m(1) - one()), LocBTensor{}};
  rc.col0 = {LocBTensor{}, lb(one() - x1m(1), one()), lb(one() - x1m(-1), one())};
  return rc;
}

// ---------- de Rham diagrams ----------

namespace {

std::array<std::array<LocTensor, 3>, 3> rho_DR(const Series<Q>& a) {
  const int n = max_degree(a) + 1;
  Matrix3<UP5> m = varpi(ell(a.retruncate(n)));
  std::array<std::array<LocTensor, 3>, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = dr::loc_tensor_from(pr12(m(i, j)));
  return r;
}

}  // namespace

PropReport check_prop_23(const Series<Q>& a) {
  PropReport rep;
  rep.which = "2.3";
  rep.input = series_string(a);
  const int n = max_degree(a) + 1;
  RowColDR rc = make_row_col_DR();
  LocTensor lhs = row_matrix_col(rc.row1, rho_DR(a), rc.col1, dr::loc_tensor_mul);
  Series<Q> ae1 = a.retruncate(n) * Series<Q>::letter(1, n);
  LocTensor rhs = dr::loc_tensor_from(dr::delta_W_DR_expanded(ae1));
  rep.lhs = dr::loc_tensor_string(lhs);
  rep.rhs = dr::loc_tensor_string(rhs);
  rep.equal = lhs == rhs;
  return rep;
}

PropReport check_prop_24(const Series<Q>& a) {
  PropReport rep;
  rep.which = "2.4";
  rep.input = series_string(a);
  const int n = max_degree(a) + 1;
  RowColDR rc = make_row_col_DR();
  LocTensor lhs = dr::loc_m_class2(row_matrix_col(rc.row1, rho_DR(a), rc.col0, dr::loc_tensor_mul));
  LocTensor rhs = dr::loc_tensor_from(dr::delta_M_DR(dr::m_class(a.retruncate(n))));
  rep.lhs = dr::loc_tensor_string(lhs);
  rep.rhs = dr::loc_tensor_string(rhs);
  rep.equal = lhs == rhs;
  return rep;
}

// ---------- Betti diagrams ----------

namespace {

std::array<std::array<LocBTensor, 3>, 3> rho_B(const GroupAlg& a) {
  Matrix3<P5Alg> m = varpi_B(ell_B(a));
  std::array<std::array<LocBTensor, 3>, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = betti::loc_B_tensor_from(pr_B_12(m(i, j)));
  return r;
}

}  // namespace

PropReport check_prop_21(const GroupAlg& a, const RowColB& rc) {
  PropReport rep;
  rep.which = "2.1";
  rep.input = betti::group_alg_string(a);
  LocBTensor lhs = row_matrix_col(rc.row1, rho_B(a), rc.col1, betti::loc_tensor_mul_B);
  GroupAlg b = betti::ga_mul(a, x1m(1) - one());
  LocBTensor rhs = betti::loc_B_tensor_from(
      betti::yb_expand2(betti::delta_W_B(betti::to_WB_generators(b))));
  rep.lhs = betti::loc_B_tensor_string(lhs);
  rep.rhs = betti::loc_B_tensor_string(rhs);
  rep.equal = lhs == rhs;
  return rep;
}

PropReport check_prop_22(const GroupAlg& a, const RowColB& rc) {
  PropReport rep;
  rep.which = "2.2";
  rep.input = betti::group_alg_string(a);
  LocBTensor lhs =
      betti::loc_B_mclass2(row_matrix_col(rc.row1, rho_B(a), rc.col0, betti::loc_tensor_mul_B));
  LocBTensor rhs = betti::loc_B_tensor_from(betti::delta_M_B(betti::mB_class(a)));
  rep.lhs = betti::loc_B_tensor_string(lhs);
  rep.rhs = betti::loc_B_tensor_string(rhs);
  rep.equal = lhs == rhs;
  return rep;
}

// ---------- fixture text ----------

namespace {

std::string lin_string(const std::vector<Q>& co, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < co.size(); ++k) {
    if (co[k] == 0) continue;
    Q c = co[k];
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (c != 1) os << c.get_str() << "*";
    os << names[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string kernel_poly_string(const KernelPoly& p) {
  static const char* kn[] = {"e15", "e25", "e35"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c0] : p.terms()) {
    Q c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (c != 1) os << c.get_str() << "*";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << kn[w[i]];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string braid_fixtures_text() {
  std::ostringstream os;
  os << "# braid_fixtures.v1\n"
     << "# kernel: e15 e25 e35 (Lie), x15 x25 x35 (group); base: e0 = e23, e1 = e12 (Lie), X0 = x23, X1 = x12 (group)\n"
     << "# pr_i, i in {1,2}: erase the point labeled i, the point labeled 5 takes the label i; pr_5 erases 5\n"
     << "# p4: e0 = e23, e1 = e12; x13 = X1^-1*X0^-1 from the centre x12*x13*x23 of K3\n"
     << "# Artin action on <x15,x25,x35> = <x1,x2,x3>: sigma_i: x_i -> x_i*x_{i+1}*x_i^-1, x_{i+1} -> x_i\n"
     << "# alpha(X1) = sigma1^-2, alpha(X0) = sigma2^-2\n";
  Elimination p5 = eliminate_sum_relations(5, {{1, 5}, {2, 5}, {3, 5}, {2, 3}, {1, 2}});
  for (const auto& [g, co] : p5.coords) {
    if (std::find(p5.free_gens.begin(), p5.free_gens.end(), g) != p5.free_gens.end()) continue;
    os << "elim5 e" << g.first << g.second << " = " << lin_string(co, {"e15", "e25", "e35", "e23", "e12"})
       << "\n";
  }
  Elimination p4 = eliminate_sum_relations(4, {{2, 3}, {1, 2}});
  for (const auto& [g, co] : p4.coords)
    os << "elim4 e" << g.first << g.second << " = " << lin_string(co, {"e0", "e1"}) << "\n";
  static const char* bn[] = {"e23", "e12"};
  static const char* kn[] = {"e15", "e25", "e35"};
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 3; ++i)
      os << "bracket [" << bn[b] << "," << kn[i] << "] = " << kernel_poly_string(action_table(b, i)) << "\n";
  static const std::vector<std::string> xn{"x15", "x25", "x35"};
  for (FLetter l : {fgen(0), fgen(0, -1), fgen(1), fgen(1, -1)})
    for (int k = 0; k < 3; ++k)
      os << "alpha " << betti::f2_string(FreeWord{l}) << " " << xn[k] << " = "
         << fw_string(alpha(FreeWord{l}, FreeWord{fgen(k)}), xn) << "\n";
  for (int i : {1, 2, 5}) {
    for (int j = 1; j <= 3; ++j)
      os << "pr" << i << " e" << j << "5 = " << series_string(pr_generator(i, j, 5, 1)) << "\n";
    os << "pr" << i << " e23 = " << series_string(pr_generator(i, 2, 3, 1)) << "\n";
    os << "pr" << i << " e12 = " << series_string(pr_generator(i, 1, 2, 1)) << "\n";
  }
  for (int i : {1, 2, 5}) {
    for (int j = 0; j < 3; ++j)
      os << "prB" << i << " " << xn[j] << " = " << betti::f2_string(pr_B_kernel_images(i)[j]) << "\n";
    os << "prB" << i << " x23 = " << betti::f2_string(pr_B_base_images(i)[0]) << "\n";
    os << "prB" << i << " x12 = " << betti::f2_string(pr_B_base_images(i)[1]) << "\n";
  }
  return os.str();
}

}  // namespace dshuffle::braids
