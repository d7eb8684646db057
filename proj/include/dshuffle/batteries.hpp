// Seeded input batteries shared by the command line, the tests and the
// acceptance run. All generators are deterministic given the engine state.
#pragma once

#include <random>
#include <vector>

#include "dshuffle/betti_side.hpp"
#include "dshuffle/braids.hpp"

namespace dshuffle {

using Rng = std::mt19937;

// Reduced words of length <= max_len in `gens` generators, shortlex order.
std::vector<FreeWord> reduced_words(int gens, int max_len);

betti::GroupAlg random_group_alg(Rng& rng, int max_terms, int max_len);
braids::UP5 random_up5(Rng& rng, int max_terms, int max_degree, int n);
braids::P5Alg random_p5_alg(Rng& rng, int max_terms, int max_len);

// Monomials of degree <= max_degree as series truncated at `n`.
std::vector<Series<Q>> word_inputs(int max_degree, int n);

}  // namespace dshuffle
