#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dshuffle/ncalg.hpp"
#include "test_util.hpp"

using namespace dshuffle;
using testutil::random_series;

namespace {

Series<Q> w(const std::string& s, int n, const Q& c = 1) { return Series<Q>::monomial(parse_word(s), c, n); }
Series<Q> one(int n) { return Series<Q>::one(n); }

// Interleavings by choosing which positions hold the letters of u.
std::map<Word, long, LenLex> shuffle_oracle(const Word& u, const Word& v) {
  std::map<Word, long, LenLex> out;
  const size_t n = u.size() + v.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if ((size_t)__builtin_popcountl(mask) != u.size()) continue;
    Word x;
    size_t i = 0, j = 0;
    for (size_t p = 0; p < n; ++p) x.push_back((mask >> p) & 1 ? u[i++] : v[j++]);
    ++out[x];
  }
  return out;
}

}  // namespace

TEST_CASE("concatenation product") {
  CHECK(w("e0", 2) * w("e1", 2) == w("e0e1", 2));
  CHECK((one(2) + w("e0", 2)) * (one(2) + w("e1", 2)) == one(2) + w("e0", 2) + w("e1", 2) + w("e0e1", 2));
  CHECK((w("e0", 1) * w("e1", 1)).is_zero());
  CHECK_THROWS_AS(w("e0", 1) * w("e1", 2), TruncationMismatch);
}

TEST_CASE("concatenation is associative with unit") {
  std::mt19937 rng(11);
  for (int n = 0; n <= 6; ++n)
    for (int t = 0; t < 4; ++t) {
      Series<Q> a = random_series(rng, n, 0.3), b = random_series(rng, n, 0.3), c = random_series(rng, n, 0.3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(one(n) * a == a);
      CHECK(a * one(n) == a);
    }
}

TEST_CASE("shuffle product") {
  CHECK(shuffle_mul(w("e0", 2), w("e1", 2)) == w("e0e1", 2) + w("e1e0", 2));
  CHECK(shuffle_mul(w("e0", 2), w("e0", 2)) == w("e0e0", 2, 2));
  // e0e1 sh e1: the oracle gives e0e1e1 twice and e1e0e1 once
  Series<Q> expect = w("e0e1e1", 3, 2) + w("e1e0e1", 3);
  CHECK(shuffle_mul(w("e0e1", 3), w("e1", 3)) == expect);
}

TEST_CASE("shuffle product agrees with the position-subset enumeration") {
  for (int du = 0; du <= 3; ++du)
    for (int dv = 0; dv <= 3; ++dv)
      for (const Word& u : words_of_degree(du))
        for (const Word& v : words_of_degree(dv)) {
          std::map<Word, long, LenLex> got;
          shuffle_words(u, v, got);
          CHECK(got == shuffle_oracle(u, v));
        }
}

TEST_CASE("primitive coproduct on words") {
  Tensor<Q> d = delta_V_DR(w("e0", 2));
  Tensor<Q> e(2);
  e.add(parse_word("e0"), Word{}, 1);
  e.add(Word{}, parse_word("e0"), 1);
  CHECK(d == e);
  Tensor<Q> u(2);
  u.add(Word{}, Word{}, 1);
  CHECK(delta_V_DR(one(2)) == u);
  Tensor<Q> f(2);
  for (auto [l, r] : {std::pair{"e0e1", "1"}, {"e0", "e1"}, {"e1", "e0"}, {"1", "e0e1"}})
    f.add(parse_word(l), parse_word(r), 1);
  CHECK(delta_V_DR(w("e0e1", 2)) == f);
}

TEST_CASE("coproduct is multiplicative on words of total degree <= 5") {
  for (int da = 0; da <= 5; ++da)
    for (int db = 0; da + db <= 5; ++db)
      for (const Word& u : words_of_degree(da))
        for (const Word& v : words_of_degree(db)) {
          Series<Q> a = Series<Q>::monomial(u, 1, 5), b = Series<Q>::monomial(v, 1, 5);
          CHECK(delta_V_DR(a * b) == delta_V_DR(a) * delta_V_DR(b));
        }
}

TEST_CASE("coproduct is dual to the shuffle product up to degree 6") {
  for (int n = 0; n <= 6; ++n)
    for (const Word& x : words_of_degree(n)) {
      Tensor<Q> d = delta_V_DR(Series<Q>::monomial(x, 1, n));
      for (int du = 0; du <= n; ++du)
        for (const Word& u : words_of_degree(du))
          for (const Word& v : words_of_degree(n - du)) {
            Series<Q> s = shuffle_mul(Series<Q>::monomial(u, 1, n), Series<Q>::monomial(v, 1, n));
            CHECK(d.coeff(u, v) == s.coeff(x));
          }
    }
}

TEST_CASE("exp and log") {
  CHECK(exp_series(Series<Q>(3)) == one(3));
  CHECK(exp_series(w("e0", 2)) == one(2) + w("e0", 2) + w("e0e0", 2, Q(1, 2)));
  for (int n = 0; n <= 8; ++n) CHECK(log_series(exp_series(w("e0", n))) == w("e0", n));
  CHECK(exp_series(w("e1", 2)).coeff(parse_word("e1e1")) == Q(1, 2));
  CHECK_THROWS(exp_series(one(2)));
  CHECK_THROWS(log_series(w("e0", 2)));
}

TEST_CASE("exp and log are mutually inverse on random inputs") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 8; ++n)
    for (int t = 0; t < 3; ++t) {
      Series<Q> a = random_series(rng, n, n > 6 ? 0.05 : 0.3);
      a.add(Word{}, -a.constant());
      CHECK(log_series(exp_series(a)) == a);
      Series<Q> g = a + one(n);
      CHECK(exp_series(log_series(g)) == g);
    }
}

TEST_CASE("coefficient extraction") {
  CHECK((one(2) + w("e0e1", 2, 3)).coeff(parse_word("e0e1")) == 3);
  CHECK_THROWS_AS(one(1).coeff(parse_word("e0e1")), std::out_of_range);
}

TEST_CASE("group-like and primitive elements") {
  CHECK(is_grouplike(exp_series(w("e0", 4))));
  CHECK_FALSE(is_grouplike(one(2) + w("e0e1", 2)));
  CHECK(is_primitive(w("e0", 3)));
  CHECK(is_primitive(bracket(w("e0", 3), w("e1", 3))));
  CHECK_FALSE(is_primitive(w("e0e1", 3)));
}

TEST_CASE("exp(p) is group-like exactly when p is primitive") {
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    Series<Q> p = testutil::random_lie(rng, 5);
    CHECK(is_primitive(p));
    CHECK(is_grouplike(exp_series(p)));
    Series<Q> q = p + w(t % 2 ? "e0e1" : "e1e1e0", 5, t + 1);  // not primitive
    CHECK_FALSE(is_primitive(q));
    CHECK_FALSE(is_grouplike(exp_series(q)));
  }
}

TEST_CASE("Gamma series") {
  Univariate<Q> g1 = gamma_series(one(4));
  for (int k = 0; k <= 4; ++k) CHECK(g1.c[k] == (k == 0 ? 1 : 0));
  // g = exp(c e1): only the t-term survives, Gamma = exp(c t)
  Q c(3, 2), f = 1;
  Univariate<Q> g2 = gamma_series(exp_series(c * w("e1", 4)));
  for (int k = 0; k <= 4; ++k) {
    if (k) f *= c / k;
    CHECK(g2.c[k] == f);
  }
  // (g|e1) = 0, (g|e0e1) = s: Gamma = 1 - s t^2 / 2 + ...
  Q s(5, 7);
  Univariate<Q> g3 = gamma_series(one(3) + w("e0e1", 3, s));
  CHECK(g3.c[1] == 0);
  CHECK(g3.c[2] == -s / 2);
}

TEST_CASE("regularization") {
  CHECK(reg_word(parse_word("e0e1")) == w("e0e1", 2) - w("e1e0", 2));
  CHECK(reg_word(parse_word("e0e0e1")) == w("e0e0e1", 3) - w("e0e1e0", 3, 2) + w("e1e0e0", 3));
  CHECK_THROWS(reg_word(parse_word("e1e0")));
  for (int n = 2; n <= 5; ++n)
    for (const Word& x : words_of_degree(n)) {
      if (!is_admissible(x)) continue;
      Series<Q> r = reg_word(x) - Series<Q>::monomial(x, 1, n);
      for (const auto& [u, c] : r.terms()) CHECK_FALSE(is_admissible(u));
    }
}

TEST_CASE("rendering") {
  CHECK(series_string(one(2) + w("e0e1", 2, Q(3, 2))) == "1 + 3/2*e0e1");
  CHECK(word_string(Word{}) == "1");
  CHECK(parse_word("e1e0") == Word{1, 0});
}
