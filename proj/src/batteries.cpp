#include "dshuffle/batteries.hpp"

namespace dshuffle {

std::vector<FreeWord> reduced_words(int gens, int max_len) {
  std::vector<FreeWord> out{{}};
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const size_t end = out.size();
    for (size_t k = begin; k < end; ++k)
      for (int g = 0; g < gens; ++g)
        for (int s : {1, -1}) {
          FreeWord w = out[k];
          if (!w.empty() && w.back() == -fgen(g, s)) continue;
          w.push_back(fgen(g, s));
          out.push_back(w);
        }
    begin = end;
  }
  return out;
}

betti::GroupAlg random_group_alg(Rng& rng, int max_terms, int max_len) {
  std::uniform_int_distribution<int> terms(1, max_terms), len(0, max_len), letter(0, 3), coef(-3, 3);
  betti::GroupAlg a;
  while (a.is_zero()) {
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      FreeWord w;
      int l = len(rng);
      for (int k = 0; k < l; ++k) {
        int x = letter(rng);
        fw_push(w, fgen(x / 2, x % 2 ? -1 : 1));
      }
      int c = coef(rng);
      if (c != 0) a += betti::ga_word(w, c);
    }
  }
  return a;
}

braids::UP5 random_up5(Rng& rng, int max_terms, int max_degree, int n) {
  static const std::pair<int, int> gens[] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                             {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  std::uniform_int_distribution<int> terms(1, max_terms), deg(0, max_degree), pick(0, 9), coef(-3, 3);
  braids::UP5 a(n);
  while (a.is_zero()) {
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      braids::UP5 m = braids::UP5::one(n);
      int d = deg(rng);
      for (int k = 0; k < d; ++k) {
        auto [p, q] = gens[pick(rng)];
        m = m * braids::UP5::generator(p, q, n);
      }
      int c = coef(rng);
      if (c != 0) a += Q(c) * m;
    }
  }
  return a;
}

braids::P5Alg random_p5_alg(Rng& rng, int max_terms, int max_len) {
  std::uniform_int_distribution<int> terms(1, max_terms), len(0, max_len), letter(0, 9), coef(-3, 3);
  braids::P5Alg a;
  while (a.is_zero()) {
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      braids::P5Elem g{};
      int l = len(rng);
      for (int k = 0; k < l; ++k) {
        int x = letter(rng), s = x % 2 ? -1 : 1, gen = x / 2;
        braids::P5Elem f = gen < 3 ? braids::p5_kernel(gen) : braids::P5Elem{{}, {fgen(gen - 3)}};
        if (s < 0) f = braids::p5_inv(f);
        g = braids::p5_mul(g, f);
      }
      int c = coef(rng);
      if (c != 0) a += braids::P5Alg(g, c);
    }
  }
  return a;
}

std::vector<Series<Q>> word_inputs(int max_degree, int n) {
  std::vector<Series<Q>> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const Word& w : words_of_degree(d)) out.push_back(Series<Q>::monomial(w, 1, n));
  return out;
}

}  // namespace dshuffle
