#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dshuffle/batteries.hpp"
#include "dshuffle/betti_side.hpp"
#include "test_util.hpp"

using namespace dshuffle;
using namespace dshuffle::betti;

namespace {

FreeWord fw(std::initializer_list<std::pair<int, int>> syl) {
  FreeWord w;
  for (auto [g, e] : syl) w = fw_mul(w, fw_pow(g, e));
  return w;
}
GroupAlg g(std::initializer_list<std::pair<int, int>> syl, const Q& c = 1) { return ga_word(fw(syl), c); }
GroupAlg one() { return ga_one(); }
Series<Q> w(const std::string& s, int n, const Q& c = 1) { return Series<Q>::monomial(parse_word(s), c, n); }

GroupAlg random_vb(std::mt19937& rng, int len) {
  std::vector<FreeWord> pool = reduced_words(2, len);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> terms(1, 4);
  GroupAlg a;
  for (int t = terms(rng); t > 0; --t) a.add(pool[pick(rng)], testutil::small_q(rng));
  return a;
}

}  // namespace

TEST_CASE("group algebra arithmetic") {
  CHECK(fw({{X0, 1}, {X0, -1}}).empty());
  CHECK(fw_inv(fw({{X0, 1}, {X1, 1}})) == fw({{X1, -1}, {X0, -1}}));
  GroupAlg a = ga_mul(g({{X0, 1}}) - one(), g({{X1, 1}}) - one());
  CHECK(a == g({{X0, 1}, {X1, 1}}) - g({{X0, 1}}) - g({{X1, 1}}) + one());
  CHECK(augmentation(a) == 0);
  CHECK(f2_string(fw({{X0, 1}, {X1, -1}})) == "X0*X1^-1");
}

TEST_CASE("Magnus expansion") {
  CHECK(magnus(g({{X0, 1}}), 3) == exp_series(w("e0", 3)));
  CHECK(magnus(g({{X0, 1}, {X0, -1}}), 3) == Series<Q>::one(3));
  Series<Q> c = magnus(g({{X0, 1}, {X1, 1}, {X0, -1}, {X1, -1}}), 2);
  CHECK(c == Series<Q>::one(2) + w("e0e1", 2) - w("e1e0", 2));
  CHECK(magnus(g({{X1, -1}}), 3) == exp_series(w("e1", 3, -1)));
}

TEST_CASE("filtration degree") {
  CHECK(filtration_degree(g({{X0, 1}}) - one()) == 1);
  CHECK(filtration_degree(ga_mul(g({{X0, 1}}) - one(), g({{X1, 1}}) - one())) == 2);
  CHECK(filtration_degree(g({{X0, 1}, {X1, 1}, {X0, -1}, {X1, -1}}) - one()) == 2);
  CHECK(filtration_degree(one()) == 0);
  CHECK_THROWS(filtration_degree(GroupAlg{}));
}

TEST_CASE("filtration degree is super-additive") {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    GroupAlg a = random_vb(rng, 3), b = random_vb(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    GroupAlg ab = ga_mul(a, b);
    if (ab.is_zero()) continue;
    CHECK(filtration_degree(ab) >= filtration_degree(a) + filtration_degree(b));
  }
}

TEST_CASE("associated graded identification of the Y generators") {
  for (int n = 1; n <= 5; ++n) {
    Word y(n - 1, 0);
    y.push_back(1);
    GroupAlg yn = y_generator(n, 1);
    CHECK(filtration_degree(yn) == n);
    Series<Q> s = magnus_symbol(yn);
    CHECK(s == Series<Q>::monomial(y, -1, s.trunc()));
  }
  // classes of X_i - 1 go to e_i
  CHECK(magnus_symbol(g({{X0, 1}}) - one()) == w("e0", 1));
  CHECK(magnus_symbol(g({{X1, 1}}) - one()) == w("e1", 1));
  CHECK(magnus_symbol(y_generator(2, -1)) == w("e0e1", 2, -1));
}

TEST_CASE("Betti coproduct on the group algebra") {
  GroupAlg2 d = delta_V_B(g({{X0, 1}}));
  CHECK(d == GroupAlg2({fw({{X0, 1}}), fw({{X0, 1}})}, 1));
  CHECK(delta_V_B(one()) == GroupAlg2({FreeWord{}, FreeWord{}}, 1));
  GroupAlg2 e = GroupAlg2({fw({{X0, 1}}), fw({{X0, 1}})}, 1) - GroupAlg2({FreeWord{}, FreeWord{}}, 1);
  CHECK(delta_V_B(g({{X0, 1}}) - one()) == e);
}

TEST_CASE("Magnus expansion intertwines the coproducts on words of length <= 4") {
  for (const FreeWord& x : reduced_words(2, 4)) {
    GroupAlg a = ga_word(x);
    CHECK(magnus2(delta_V_B(a), 5) == delta_V_DR(magnus(a, 5)));
  }
}

TEST_CASE("W^B generators") {
  CHECK(y_generator(1, 1) == ga_mul(g({{X0, 1}}), one() - g({{X1, 1}})));
  CHECK(y_generator(2, 1) == ga_mul(ga_mul(g({{X0, 1}}) - one(), g({{X0, 1}})), one() - g({{X1, 1}})));
  CHECK(to_WB_generators(y_generator(1, 1)) == yb_y(1, 1));
  CHECK(to_WB_generators(y_generator(2, 1)) == yb_y(2, 1));
  CHECK(yb_expand(to_WB_generators(g({{X1, 1}}) - one())) == g({{X1, 1}}) - one());
  CHECK(in_WB(one()));
  CHECK_FALSE(in_WB(g({{X0, 1}})));
  CHECK_THROWS(to_WB_generators(g({{X1, 1}, {X0, 1}})));
}

TEST_CASE("to_WB_generators round trip on random elements") {
  std::mt19937 rng(17);
  GroupAlg x1m = g({{X1, 1}}) - one();
  for (int t = 0; t < 50; ++t) {
    GroupAlg a = ga_mul(random_vb(rng, 4), x1m);  // words of length <= 5
    REQUIRE(in_WB(a));
    CHECK(yb_expand(to_WB_generators(a)) == a);
  }
}

TEST_CASE("W^B coproduct") {
  YBElem2 d1 = delta_W_B(yb_y(1, 1));
  CHECK(d1 == tensor_product(yb_y(1, 1), YBElem(YBMonomial{}, 1)) + tensor_product(YBElem(YBMonomial{}, 1), yb_y(1, 1)));
  YBElem2 d2 = delta_W_B(yb_y(2, -1));
  YBElem u(YBMonomial{}, 1);
  CHECK(d2 == tensor_product(yb_y(2, -1), u) + tensor_product(yb_y(1, -1), yb_y(1, -1)) + tensor_product(u, yb_y(2, -1)));
  // X1 Y1+ by multiplicativity, checked after expansion
  YBElem m = yb_mul(yb_x1(1), yb_y(1, 1));
  CHECK(yb_expand2(delta_W_B(m)) == ga2_mul(yb_expand2(delta_W_B(yb_x1(1))), yb_expand2(d1)));
  CHECK(delta_W_B(yb_x1(1)) == tensor_product(yb_x1(1), yb_x1(1)));
  // not the restriction of the diagonal coproduct of kF2
  CHECK_FALSE(yb_expand2(d1) == delta_V_B(y_generator(1, 1)));
}

TEST_CASE("W^B coproduct respects the filtration on monomials of degree <= 4") {
  std::vector<YBMonomial> mons{{}};
  std::vector<YBLetter> letters;
  for (int e : {-1, 1}) letters.push_back({0, e, 0});
  for (int n = 1; n <= 4; ++n)
    for (int s : {-1, 1}) letters.push_back({1, n, s});
  for (size_t i = 0; i < mons.size(); ++i)
    for (const YBLetter& l : letters) {
      YBMonomial m = mons[i];
      if (l.kind == 0 && !m.empty() && m.back().kind == 0) continue;  // X1 powers merge
      m.push_back(l);
      if (yb_filtration_degree(m) <= 4 && m.size() <= 3) mons.push_back(m);
    }
  for (const YBMonomial& m : mons) {
    YBElem2 d = delta_W_B(YBElem(m, 1));
    for (const auto& [k, c] : d.terms())
      CHECK(yb_filtration_degree(k.first) + yb_filtration_degree(k.second) >= yb_filtration_degree(m));
  }
}

TEST_CASE("M^B projection, lift and coproduct") {
  CHECK(mB_class(g({{X0, 1}})) == one());
  CHECK(mB_class(g({{X1, 1}, {X0, 1}})) == g({{X1, 1}}));
  CHECK(wB_of_mB(one()) == one());
  CHECK(delta_M_B(one()) == GroupAlg2({FreeWord{}, FreeWord{}}, 1));
  CHECK(delta_M_B(mB_class(g({{X0, 1}}))) == GroupAlg2({FreeWord{}, FreeWord{}}, 1));
  GroupAlg y1 = y_generator(1, 1);
  CHECK(delta_M_B(mB_class(y1)) == mB_class2(yb_expand2(delta_W_B(yb_y(1, 1)))));
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    GroupAlg m = mB_class(random_vb(rng, 5));
    GroupAlg a = wB_of_mB(m);
    CHECK(in_WB(a));
    CHECK(mB_class(a) == m);
  }
}

TEST_CASE("localization at X1 - 1") {
  LocBElem x1m = loc_B_from(g({{X1, 1}}) - one());
  CHECK(loc_mul_B(x1m, loc_B_pole(1)) == loc_B_from(one()));
  CHECK(loc_mul_B(loc_B_pole(1), loc_B_pole(1)) == loc_B_pole(2));
  CHECK(loc_mul_B(loc_B_from(g({{X1, 1}})), loc_B_pole(1)) == loc_B_from(one()) + loc_B_pole(1));
  // the localization map is multiplicative
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    GroupAlg a = random_vb(rng, 3), b = random_vb(rng, 3);
    CHECK(loc_mul_B(loc_B_from(a), loc_B_from(b)) == loc_B_from(ga_mul(a, b)));
  }
}

TEST_CASE("the map from M^B to its localization is injective on short words") {
  std::set<LocBWord, LocBLess> seen;
  int basis = 0;
  for (const FreeWord& x : reduced_words(2, 4)) {
    if (!x.empty() && fletter_gen(x.back()) != X1) continue;
    LocBTensor img = loc_B_mclass2(loc_B_tensor_from(GroupAlg2({x, FreeWord{}}, 1)));
    REQUIRE(img.size() == 1);
    CHECK(img.terms().begin()->first.second.empty());
    seen.insert(img.terms().begin()->first.first);
    ++basis;
  }
  CHECK((int)seen.size() == basis);
}

TEST_CASE("yhat coordinates") {
  const int n = 5;
  YHat y1 = to_yhat_basis(yhat_generator(1, n));
  CHECK(y1.c == LinComb<dr::YMonomial, Q, dr::YLess>({1}, 1));
  YHat y2 = to_yhat_basis(yhat_generator(2, n));
  CHECK(y2.c == LinComb<dr::YMonomial, Q, dr::YLess>({2}, 1));
  Series<Q> x1m = magnus(g({{X1, 1}}) - one(), n);
  YHat h = to_yhat_basis(x1m);
  CHECK(h.c.coeff({1}) == -1);
  CHECK(yhat_expand(h) == x1m);
  CHECK_THROWS(to_yhat_basis(magnus(g({{X0, 1}}), n)));
  std::mt19937 rng(12);
  GroupAlg x1 = g({{X1, 1}}) - one();
  for (int t = 0; t < 50; ++t) {
    Series<Q> a = magnus(ga_mul(random_vb(rng, 4), x1), n);
    CHECK(yhat_expand(to_yhat_basis(a)) == a);
  }
}

TEST_CASE("coproduct in yhat coordinates matches the W^B coproduct") {
  const int n = 4;
  for (int k = 1; k <= 3; ++k)
    for (int s : {1, -1}) {
      YBElem y = yb_y(k, s);
      CHECK(delta_W_B_hat(magnus(yb_expand(y), n)) == magnus2(yb_expand2(delta_W_B(y)), n));
    }
  YBElem m = yb_mul(yb_x1(-1), yb_y(2, 1));
  CHECK(delta_W_B_hat(magnus(yb_expand(m), n)) == magnus2(yb_expand2(delta_W_B(m)), n));
}
