#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flipbraid/flip_algebra.hpp"
#include "flipbraid/geometry.hpp"
#include "flipbraid/matrix.hpp"
#include "flipbraid/rational.hpp"

// Seeded generators for property tests. Every draw goes through rng() % range
// so sequences are identical across standard libraries.

namespace flipbraid::testing {

using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi);

/// num/den with num in [-num_bound, num_bound], den in [1, den_bound].
Rational random_rational(Rng& rng, long num_bound = 30, long den_bound = 9);

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// L·U with unit lower L and an upper U with nonzero diagonal.
RationalMatrix random_nonsingular(Rng& rng, std::size_t size);

/// `count` pairwise distinct rationals.
std::vector<Rational> random_distinct(Rng& rng, std::size_t count);

LabelMap random_labels(Rng& rng, std::size_t count);

/// Random permutation of 1..4 as flip roles.
FlipRoles random_roles(Rng& rng);

/**
 * Boundary (-20,-4), (24,-4), (2,30) and n interior points on a 1/8 grid,
 * strictly inside, distinct, in general position. ζ_m = m.
 */
Configuration random_configuration(Rng& rng, int n);

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[static_cast<std::size_t>(draw(rng, 0, static_cast<long>(k) - 1))]);
}

}  // namespace flipbraid::testing
