#pragma once

#include <random>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/semigroup.hpp"

namespace cstar {

// Complex Gaussian entries, one block per dim.
AlgebraElement random_element(const std::vector<int>& dims, std::mt19937_64& rng);

AlgebraElement random_hermitian(const std::vector<int>& dims, std::mt19937_64& rng);

// Per-block Q factor of a complex Gaussian matrix.
AlgebraElement random_unitary(const std::vector<int>& dims, std::mt19937_64& rng);

// Positive contraction with spectrum in [0, 1] touching both a resampled
// guard against the zero element; built as (H/||H|| + I)/2.
AlgebraElement random_positive_contraction(const std::vector<int>& dims, std::mt19937_64& rng);

// Uniform draw: naturals from {1..range}, integers from {-range..range},
// lattice coordinates from {-range..range}, cyclic from the whole group.
Element random_semigroup_element(const MeasureSemigroup& s, std::mt19937_64& rng,
                                 std::int64_t range);

}  // namespace cstar
