#pragma once

#include "f2norm/fourier.hpp"
#include "f2norm/group.hpp"
#include "f2norm/point_set.hpp"
#include "f2norm/set_functions.hpp"

#include <random>
#include <vector>

namespace f2norm {

using Rng = std::mt19937_64;

/// Generator for trial i of a seeded run; independent of how trials are scheduled.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// Each point kept independently with a density drawn uniformly from (0, 1).
PointSet random_point_set(Rng& rng, GroupDim dim);

/// Span of up to max_dim random characters.
DualSubspace random_subspace(Rng& rng, GroupDim dim, int max_dim);
DualSubspace random_subspace(Rng& rng, GroupDim dim);

/// Values num / 2^exp with |num| <= 2^bits and exp in [0, max_exp].
FunctionTable random_dyadic_table(Rng& rng, GroupDim dim, int bits = 8, int max_exp = 6);

/// size linearly independent characters (size <= n).
std::vector<CharMask> random_independent_set(Rng& rng, GroupDim dim, int size);

/// m rationals in [0, 1] with denominators in [1, max_den].
std::vector<Rational> random_deltas(Rng& rng, int m, int max_den);

}  // namespace f2norm
