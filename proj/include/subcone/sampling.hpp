#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subcone/discrete_function.hpp"
#include "subcone/embedding.hpp"
#include "subcone/pl_function.hpp"
#include "subcone/rational.hpp"

// Seeded generators for the property suites. Only modulo arithmetic on the
// raw engine output is used, so a seed produces the same values everywhere.
namespace subcone::sampling {

using Rng = std::mt19937_64;

std::uint64_t uniform_index(Rng& rng, std::uint64_t n);
bool coin(Rng& rng, unsigned percent);

/// num / den with |num| <= max_abs_num and 1 <= den <= max_den.
Rational rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den);
/// Strictly positive rational in (0, max_value], small denominators.
Rational positive_rational(Rng& rng, std::int64_t max_value, std::int64_t max_den);

/// Slope drawn from a palette that includes 0 and members of the g_n family
/// so the homogeneity shift is exercised.
Rational slope(Rng& rng);

/// Random PL function with up to max_segments segments.
PLFunction pl_function(Rng& rng, unsigned max_segments = 4);

/// Family of PL functions built by cutting earlier members at random times
/// and continuing them, so shared prefixes, extensions and prefixes of
/// prefixes all occur.
std::vector<PLFunction> pl_family(Rng& rng, std::size_t count, unsigned max_segments = 3);

/// Family as pl_family but guaranteed pairwise distinct.
std::vector<PLFunction> distinct_pl_family(Rng& rng, std::size_t count, unsigned max_segments = 3);

/// Chain that extends a base: base, base continued, continued again ...
std::vector<PLFunction> extension_chain(Rng& rng, const PLFunction& base, std::size_t count);

DiscreteFunction discrete_function(Rng& rng, unsigned max_support = 4);

/// Pair sharing a random prefix of support, then diverging.
std::pair<DiscreteFunction, DiscreteFunction> discrete_pair(Rng& rng, unsigned max_support = 4);

/// Tree metric of n points sampled from a random edge-weighted tree (leaves
/// and internal nodes alike). The path-length distances are the ground truth.
TreeMetric tree_metric(Rng& rng, std::size_t n);

}  // namespace subcone::sampling
