#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <cstdlib>

#include "dshuffle/mzv.hpp"

using namespace dshuffle;
using namespace dshuffle::mzv;

namespace {

BigFloat pi() { return boost::math::constants::pi<BigFloat>(); }

std::vector<Composition> admissible_of_weight(int w) {
  std::vector<Composition> out;
  // all compositions of w, keep k1 > 1
  for (unsigned mask = 0; mask < (1u << (w - 1)); ++mask) {
    Composition k{1};
    for (int i = 0; i < w - 1; ++i) {
      if (mask >> i & 1) k.push_back(1);
      else ++k.back();
    }
    if (is_admissible(k)) out.push_back(k);
  }
  return out;
}

std::vector<Composition> all_of_weight(int w) {
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (w - 1)); ++mask) {
    Composition k{1};
    for (int i = 0; i < w - 1; ++i) {
      if (mask >> i & 1) k.push_back(1);
      else ++k.back();
    }
    out.push_back(k);
  }
  return out;
}

BigFloat eval(const CompositionComb& c, unsigned bits) {
  BigFloat s = 0;
  for (const auto& [k, m] : c) s += BigFloat(m) * zeta(k, bits).value;
  return s;
}

}  // namespace

TEST_CASE("compositions") {
  CHECK(is_admissible({2, 1}));
  CHECK_FALSE(is_admissible({1, 2}));
  CHECK_FALSE(is_admissible({}));
  CHECK(weight({3, 1, 2}) == 6);
  CHECK(composition_string({2, 1}) == "2,1");
  CHECK(parse_composition("3,1") == Composition{3, 1});
  CHECK_THROWS(parse_composition("3,,1"));
  CHECK_THROWS(parse_composition("0"));
  CHECK_THROWS(zeta({1, 2}, 64));
  CHECK_THROWS(zeta({5, 1, 1}, 64));  // beyond the weight guard
}

TEST_CASE("word dictionary") {
  // e0^{k-1} e1 per index, so that (phi|e0e1) = -zeta(2)
  CHECK(composition_to_word({2}) == Word{0, 1});
  CHECK(composition_to_word({3, 1}) == Word{0, 0, 1, 1});
  CHECK(word_to_composition(Word{0, 1, 0, 0, 1}) == Composition{2, 3});
  for (int w = 2; w <= 6; ++w)
    for (const Composition& k : admissible_of_weight(w)) CHECK(word_to_composition(composition_to_word(k)) == k);
}

TEST_CASE("zeta against closed forms") {
  const unsigned bits = 128;
  PrecisionScope scope(bits + 32);
  const BigFloat tol = BigFloat(1e-36);
  BigFloat p2 = pi() * pi();
  auto z = [&](const Composition& k) { return zeta(k, bits).value; };
  CHECK(abs(z({2}) - p2 / 6) < tol);
  CHECK(abs(z({4}) - p2 * p2 / 90) < tol);
  CHECK(abs(z({6}) - p2 * p2 * p2 / 945) < tol);
  CHECK(abs(z({2, 1}) - z({3})) < tol);
  CHECK(abs(z({3, 1}) - p2 * p2 / 360) < tol);
  CHECK(abs(z({2, 2}) - p2 * p2 / 120) < tol);
  CHECK(abs(z({2, 1, 1}) - z({4})) < tol);
  CHECK(abs(z({4, 2}) - (z({3}) * z({3}) - 4 * p2 * p2 * p2 / 2835)) < tol);
  CHECK(to_string(z({2}), 20) == "1.6449340668482264365");
}

TEST_CASE("zeta against direct summation with an integral tail bound") {
  const unsigned bits = 128;
  PrecisionScope scope(bits + 32);
  const long M = 20000;
  for (int k = 2; k <= 6; ++k) {
    BigFloat s = 0;
    for (long n = M; n >= 1; --n) s += 1 / pow(BigFloat(n), k);
    // sum_{n>M} n^-k lies between the integrals from M+1 and from M
    BigFloat lo = s + 1 / (BigFloat(k - 1) * pow(BigFloat(M + 1), k - 1));
    BigFloat hi = s + 1 / (BigFloat(k - 1) * pow(BigFloat(M), k - 1));
    ZetaValue zv = zeta({k}, bits);
    CHECK(zv.value + zv.error >= lo);
    CHECK(zv.value - zv.error <= hi);
  }
  // zeta(2,1) = sum_n H_{n-1}/n^2; tail below (1 + log M)/M + 1/M
  BigFloat s = 0, h = 0;
  for (long n = 1; n <= M; ++n) {
    s += h / (BigFloat(n) * n);
    h += BigFloat(1) / n;
  }
  ZetaValue z21 = zeta({2, 1}, bits);
  CHECK(z21.value >= s);
  CHECK(z21.value - s <= (2 + log(BigFloat(M))) / M);
}

TEST_CASE("error bounds are honest under precision doubling up to weight 5") {
  for (int w = 2; w <= 5; ++w)
    for (const Composition& k : admissible_of_weight(w)) {
      ZetaValue a = zeta(k, 128), b = zeta(k, 256);
      PrecisionScope scope(300);
      CHECK(a.error < BigFloat(1e-38));
      CHECK(abs(a.value - b.value) <= a.error + b.error);
      CHECK(a.bits == 128);
    }
}

TEST_CASE("stuffle is commutative and associative up to weight 6") {
  CHECK(stuffle({2}, {3}) == CompositionComb{{{2, 3}, 1}, {{3, 2}, 1}, {{5}, 1}});
  CHECK(stuffle({}, {2, 1}) == CompositionComb{{{2, 1}, 1}});
  for (int wu = 1; wu <= 5; ++wu)
    for (int wv = 1; wu + wv <= 6; ++wv)
      for (const Composition& u : all_of_weight(wu))
        for (const Composition& v : all_of_weight(wv)) CHECK(stuffle(u, v) == stuffle(v, u));
  auto st = [](const CompositionComb& a, const Composition& c) {
    CompositionComb r;
    for (const auto& [k, m] : a)
      for (const auto& [k2, m2] : stuffle(k, c)) r[k2] += m * m2;
    return r;
  };
  auto ts = [](const Composition& a, const CompositionComb& b) {
    CompositionComb r;
    for (const auto& [k, m] : b)
      for (const auto& [k2, m2] : stuffle(a, k)) r[k2] += m * m2;
    return r;
  };
  for (int wu = 1; wu <= 4; ++wu)
    for (int wv = 1; wu + wv <= 5; ++wv)
      for (int ww = 1; wu + wv + ww <= 6; ++ww)
        for (const Composition& u : all_of_weight(wu))
          for (const Composition& v : all_of_weight(wv))
            for (const Composition& x : all_of_weight(ww)) CHECK(st(stuffle(u, v), x) == ts(u, stuffle(v, x)));
}

TEST_CASE("harmonic and shuffle relations numerically") {
  const unsigned bits = 128;
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    CHECK(harmonic_residual(a, b, bits) < BigFloat(1e-36));
    CHECK(shuffle_residual(a, b, bits) < BigFloat(1e-36));
  }
  // a sign flip in the stuffle is detected
  CHECK(harmonic_residual(2, 3, bits, -1) > BigFloat(1));
  // zeta(2)^2 = 2 zeta(2,2) + 4 zeta(3,1)
  CHECK(shuffle_expansion(2, 2) == CompositionComb{{{2, 2}, 2}, {{3, 1}, 4}});
}

// The binomials as displayed, C(a-1,i-1) + C(b-1,j-1), would also need the
// divergent i = 1 term; without it they do not reproduce zeta(a) zeta(b).
TEST_CASE("transposed binomials in the shuffle expansion fail") {
  const unsigned bits = 128;
  CompositionComb conv = shuffle_expansion_transposed(2, 2);
  CHECK(conv == CompositionComb{{{2, 2}, 2}, {{3, 1}, 1}});
  for (const auto& [k, m] : conv) CHECK(is_admissible(k));
  PrecisionScope scope(bits + 32);
  BigFloat z2 = zeta({2}, bits).value;
  BigFloat lhs = z2 * z2, rhs = eval(conv, bits);
  CHECK(abs(lhs - rhs) > BigFloat(0.5));
  CHECK(abs(lhs - eval(shuffle_expansion(2, 2), bits)) < BigFloat(1e-36));
}

TEST_CASE("KZ associator coefficients") {
  const unsigned bits = 128;
  Series<BigFloat> phi = phi_kz(4, bits);
  PrecisionScope scope(bits + 32);
  BigFloat z2 = zeta({2}, bits).value;
  CHECK(abs(phi.coeff(Word{0, 1}) + z2) < BigFloat(1e-36));
  // (2 pi i)^2 / 24 read as -pi^2/6
  CHECK(abs(phi.coeff(Word{0, 1}) + pi() * pi() / 6) < BigFloat(1e-36));
  CHECK(abs(phi.coeff(Word{0})) < BigFloat(1e-36));
  CHECK(abs(phi.coeff(Word{1})) < BigFloat(1e-36));
  CHECK(abs(phi.coeff(Word{1, 0}) - z2) < BigFloat(1e-36));
}

TEST_CASE("numeric DMR check of the KZ associator") {
  for (int W = 3; W <= 5; ++W) {
    NumericReport r = numeric_dmr_check(W, 128);
    CHECK(r.verdict);
    CHECK(r.residuals.size() == 5);
    for (const auto& x : r.residuals) CHECK(x.value < BigFloat(1e-30));
  }
  std::map<Composition, BigFloat> shift{{{2}, BigFloat(1e-3)}};
  NumericReport bad = numeric_dmr_check(4, 128, 1e-8, shift);
  CHECK_FALSE(bad.verdict);
}

TEST_CASE("default precision from the environment") {
  unsetenv("DSHUFFLE_PREC");
  CHECK(default_precision_bits() == 128);
  setenv("DSHUFFLE_PREC", "200", 1);
  CHECK(default_precision_bits() == 200);
  setenv("DSHUFFLE_PREC", "abc", 1);
  CHECK_THROWS(default_precision_bits());
  setenv("DSHUFFLE_PREC", "8", 1);
  CHECK_THROWS(default_precision_bits());
  unsetenv("DSHUFFLE_PREC");
}

TEST_CASE("CSV export") {
  CHECK(zeta_csv_header() == "composition,weight,value,error_bound");
  std::string row = zeta_csv_row({2, 1}, zeta({2, 1}, 64));
  CHECK(row.rfind("\"2,1\",3,1.2020569031595942", 0) == 0);
}
