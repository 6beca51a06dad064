#pragma once

// Seeded generators of exact rational test data.

#include <cstdint>
#include <random>
#include <utility>

#include "h3m/forms.hpp"

namespace h3m {

using Rng = std::mt19937_64;

// Numerator uniform in [-num_max, num_max], denominator uniform in [1, den_max].
Scalar random_rational(Rng& rng, int num_max = 3, int den_max = 3);
Vec random_vec(Rng& rng, std::size_t n, int num_max = 3, int den_max = 3);
Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int num_max = 3, int den_max = 3);
Mat random_symmetric(Rng& rng, std::size_t n, int num_max = 3, int den_max = 3);
Mat random_invertible(Rng& rng, std::size_t n);
Mat random_nondegenerate_symmetric(Rng& rng, std::size_t n);

// Exact element of O(p,q): a Cayley transform (I - S)(I + S)⁻¹ with
// S = I_{p,q}·A, A antisymmetric, composed with a signed permutation that
// preserves the two coordinate blocks.
Mat cayley_element(Rng& rng, int p, int q);
Mat signed_block_permutation(Rng& rng, int p, int q);
Mat random_opq(Rng& rng, int p, int q);

Subspace transform(const Mat& g, const Subspace& W);
Flag transform(const Mat& g, const Flag& f);

// Random flag of type (k1, k2) with small-integer spanning vectors.
Flag random_flag(Rng& rng, std::size_t n, std::size_t k1, std::size_t k2);

// Two random (1, n-2) flags with {-1,0,1} spanning vectors and equal orbit
// invariants, drawn by rejection.
std::pair<Flag, Flag> equivalent_flag_pair(Rng& rng, int p, int q);

} // namespace h3m
