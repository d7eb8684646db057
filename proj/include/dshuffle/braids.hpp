// Moduli-space layer: U(p5) as a smash product with a relation-quotient oracle,
// P5* as F3 x| F2, the morphisms ell / pr_i / pr_12, the matrix morphisms
// varpi and varpi_B, and the four coproduct diagrams.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dshuffle/betti_side.hpp"
#include "dshuffle/dr_side.hpp"
#include "dshuffle/lincomb.hpp"
#include "dshuffle/linalg.hpp"

namespace dshuffle::braids {

// ---------- U(p5) ----------

// Kernel letters 0,1,2 stand for e15,e25,e35; base letters 0,1 for e0 = e23, e1 = e12.
using UPKey = std::pair<Word, Word>;
struct UPLess {
  bool operator()(const UPKey& a, const UPKey& b) const;
};

class UP5 {
 public:
  using Comb = LinComb<UPKey, Q, UPLess>;
  explicit UP5(int n = 0) : n_(n) {}
  static UP5 one(int n);
  static UP5 kernel(int i, int n);  // e_{i+1,5}
  static UP5 base(int b, int n);    // e23 (b=0), e12 (b=1)
  static UP5 generator(int i, int j, int n);  // e_ij, 1 <= i < j <= 5 (or j < i)

  int trunc() const { return n_; }
  const Comb& terms() const { return c_; }
  bool is_zero() const { return c_.is_zero(); }
  void add(const UPKey& k, const Q& c);

  UP5& operator+=(const UP5& o);
  UP5& operator-=(const UP5& o);
  friend UP5 operator+(UP5 a, const UP5& b) { return a += b; }
  friend UP5 operator-(UP5 a, const UP5& b) { return a -= b; }
  friend UP5 operator*(const Q& s, UP5 a);
  friend UP5 operator*(const UP5& a, const UP5& b);
  friend bool operator==(const UP5& a, const UP5& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  int max_degree() const;

 private:
  int n_;
  Comb c_;
};

std::string up5_string(const UP5& a);
std::string up5_key_string(const UPKey& k);

// Linear elimination of the sum relations in degree one: coefficients of e_ij
// in the chosen free generators.
struct Elimination {
  int points;
  std::vector<std::pair<int, int>> free_gens;
  std::map<std::pair<int, int>, std::vector<Q>> coords;  // (i<j) -> coefficients
  const std::vector<Q>& of(int i, int j) const;
};
Elimination eliminate_sum_relations(int points, const std::vector<std::pair<int, int>>& free_gens);

// Bracket [b, e_{i5}] for base letter b as a kernel-quadratic polynomial.
using KernelPoly = LinComb<Word, Q, LenLex>;
const KernelPoly& action_table(int b, int i);

// ---------- oracle ----------

// Free algebra on e15,e25,e35,e23,e12 (letters 0..4) modulo the quadratic relations.
using FreeAlg = LinComb<Word, Q, LenLex>;
FreeAlg oracle_generator(int i, int j);
FreeAlg up5_as_free(const UPKey& k);
UP5 up5_oracle_reduce(const FreeAlg& a, int d, int n);
int oracle_quotient_dimension(int d);

// ---------- morphisms ----------

UP5 ell(const Series<Q>& a);
Series<Q> pr_generator(int i, int a, int b, int n);  // image of e_ab under pr_i
Series<Q> pr(int i, const UP5& a);
Tensor<Q> pr12(const UP5& a);

template <class R>
struct Matrix3 {
  std::array<R, 9> m;
  R& operator()(int i, int j) { return m[3 * i + j]; }
  const R& operator()(int i, int j) const { return m[3 * i + j]; }
};

template <class R, class Mul>
Matrix3<R> mat_mul(const Matrix3<R>& a, const Matrix3<R>& b, Mul mul, const R& zero) {
  Matrix3<R> r;
  r.m.fill(zero);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      R s = zero;
      for (int k = 0; k < 3; ++k) s += mul(a(i, k), b(k, j));
      r(i, j) = s;
    }
  return r;
}

Matrix3<UP5> varpi(const UP5& a);
// e_{i5} a == sum_j varpi(a)_{ij} e_{j5} for i = 1..3 (needs trunc > max degree of a)
bool varpi_identity_holds(const UP5& a, const Matrix3<UP5>& m);

// ---------- P5* ----------

struct P5Elem {
  FreeWord ker;   // in x15, x25, x35
  FreeWord base;  // in X0 = x23, X1 = x12
  bool operator==(const P5Elem& o) const { return ker == o.ker && base == o.base; }
};
struct P5Less {
  bool operator()(const P5Elem& a, const P5Elem& b) const;
};
using P5Alg = LinComb<P5Elem, Q, P5Less>;

FreeWord artin_apply(const std::vector<int>& braid, const FreeWord& w);  // sigma_{+-i} letters
FreeWord alpha(const FreeWord& base, const FreeWord& w);
P5Elem p5_mul(const P5Elem& a, const P5Elem& b);
P5Elem p5_inv(const P5Elem& a);
P5Alg p5_alg_mul(const P5Alg& a, const P5Alg& b);
P5Elem p5_kernel(int i);
std::string p5_string(const P5Elem& g);
std::string p5_alg_string(const P5Alg& a);

P5Alg ell_B(const betti::GroupAlg& a);
FreeWord pr_B(int i, const P5Elem& g);
betti::GroupAlg pr_B_alg(int i, const P5Alg& a);
betti::GroupAlg2 pr_B_12(const P5Alg& a);
const std::vector<FreeWord>& pr_B_kernel_images(int i);
const std::vector<FreeWord>& pr_B_base_images(int i);

Matrix3<P5Alg> varpi_B(const P5Alg& a);
bool varpi_B_identity_holds(const P5Alg& a, const Matrix3<P5Alg>& m);

// ---------- row / column vectors and the diagrams ----------

struct RowColDR {
  std::array<dr::LocTensor, 3> row1, col1, col0;
};
struct RowColB {
  std::array<betti::LocBTensor, 3> row1, col1, col0;
};
RowColDR make_row_col_DR();
RowColB printed_row_col_B();  // as displayed in the source; fails the diagrams
RowColB working_row_col_B();  // the vectors that make the diagrams commute

struct PropReport {
  std::string which;
  std::string input;
  std::string lhs, rhs;
  bool equal = false;
};

PropReport check_prop_21(const betti::GroupAlg& a, const RowColB& rc = working_row_col_B());
PropReport check_prop_22(const betti::GroupAlg& a, const RowColB& rc = working_row_col_B());
PropReport check_prop_23(const Series<Q>& a);
PropReport check_prop_24(const Series<Q>& a);

std::string braid_fixtures_text();

}  // namespace dshuffle::braids
