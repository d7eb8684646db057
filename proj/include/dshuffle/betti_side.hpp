// The Betti side: kF2, W^B generated by X1^{+-1} and Y_n^{+-}, M^B = V^B/V^B(X0-1),
// Magnus expansion, the localization at X1-1 and yhat-coordinates.
#pragma once

#include <string>
#include <tuple>

#include "dshuffle/dr_side.hpp"
#include "dshuffle/freegroup.hpp"
#include "dshuffle/lincomb.hpp"
#include "dshuffle/ncalg.hpp"

namespace dshuffle::betti {

constexpr int X0 = 0, X1 = 1;

using GroupAlg = LinComb<FreeWord, Q, FreeLess>;
using GroupAlg2 = LinComb2<FreeWord, Q, FreeLess>;

std::string f2_string(const FreeWord& w);  // "X0*X1^-1"
std::string group_alg_string(const GroupAlg& a);
std::string group_alg2_string(const GroupAlg2& t);

GroupAlg ga_word(const FreeWord& w, const Q& c = 1);
GroupAlg ga_one();
GroupAlg ga_mul(const GroupAlg& a, const GroupAlg& b);
GroupAlg2 ga2_mul(const GroupAlg2& a, const GroupAlg2& b);
Q augmentation(const GroupAlg& a);

// i^V: X_i -> exp(e_i)
Series<Q> magnus(const GroupAlg& a, int n);
Tensor<Q> magnus2(const GroupAlg2& t, int n);
int filtration_degree(const GroupAlg& a);
// leading homogeneous part of the Magnus image (the class in gr)
Series<Q> magnus_symbol(const GroupAlg& a);

GroupAlg2 delta_V_B(const GroupAlg& a);

// ---------- generators of W^B ----------

struct YBLetter {
  int kind;  // 0: X1^n, 1: Y_n^{sign}
  int n;
  int sign;  // +1 / -1, only for kind 1
  auto key() const { return std::tie(kind, n, sign); }
  bool operator<(const YBLetter& o) const { return key() < o.key(); }
  bool operator==(const YBLetter& o) const { return key() == o.key(); }
};
using YBMonomial = std::vector<YBLetter>;
struct YBLess {
  bool operator()(const YBMonomial& a, const YBMonomial& b) const;
};
using YBElem = LinComb<YBMonomial, Q, YBLess>;
using YBElem2 = LinComb2<YBMonomial, Q, YBLess>;

int yb_filtration_degree(const YBMonomial& m);
std::string yb_string(const YBMonomial& m);  // "Y2+*X1^-1"
std::string yb_elem_string(const YBElem& a);
YBElem yb_mul(const YBElem& a, const YBElem& b);
YBElem yb_x1(int n);
YBElem yb_y(int n, int sign);
GroupAlg yb_expand(const YBElem& a);
GroupAlg2 yb_expand2(const YBElem2& t);
GroupAlg y_generator(int n, int sign);  // (X0^s-1)^{n-1} X0^s (1-X1^s)

bool in_WB(const GroupAlg& a);
YBElem to_WB_generators(const GroupAlg& a);
YBElem2 delta_W_B(const YBElem& a);

// ---------- M^B ----------

GroupAlg mB_class(const GroupAlg& v);
GroupAlg2 mB_class2(const GroupAlg2& t);
GroupAlg wB_of_mB(const GroupAlg& m);
GroupAlg2 delta_M_B(const GroupAlg& m);

// ---------- localization at X1 - 1 ----------

// kind 0: X0^e (e != 0) in A1;  kind 1: X1^e (e != 0), kind 2: (X1-1)^{-e} (e >= 1) in A2
struct LFactor {
  int kind;
  int e;
  auto key() const { return std::tie(kind, e); }
  bool operator<(const LFactor& o) const { return key() < o.key(); }
  bool operator==(const LFactor& o) const { return key() == o.key(); }
};
using LocBWord = std::vector<LFactor>;
struct LocBLess {
  bool operator()(const LocBWord& a, const LocBWord& b) const;
};
using LocBElem = LinComb<LocBWord, Q, LocBLess>;
using LocBTensor = LinComb2<LocBWord, Q, LocBLess>;

LocBElem loc_word_mul_B(const LocBWord& a, const LocBWord& b);
LocBElem loc_mul_B(const LocBElem& a, const LocBElem& b);
LocBTensor loc_tensor_mul_B(const LocBTensor& a, const LocBTensor& b);
LocBElem loc_B_from(const GroupAlg& a);
LocBTensor loc_B_tensor_from(const GroupAlg2& t);
LocBElem loc_B_pole(int m);  // (X1-1)^{-m}
LocBTensor loc_B_mclass2(const LocBTensor& t);
std::string loc_B_word_string(const LocBWord& w);
std::string loc_B_tensor_string(const LocBTensor& t);

// ---------- yhat coordinates of the completion ----------

struct YHat {
  int n = 0;
  LinComb<dr::YMonomial, Q, dr::YLess> c;
};
Series<Q> yhat_generator(int k, int n);  // magnus(Y_k^+)
Series<Q> yhat_expand(const YHat& a);
YHat to_yhat_basis(const Series<Q>& a);
// Delta^{W,B} transported to exp-coordinates, via yhat monomials.
Tensor<Q> delta_W_B_hat(const Series<Q>& a);

}  // namespace dshuffle::betti
