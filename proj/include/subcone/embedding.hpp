#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "subcone/discrete_function.hpp"
#include "subcone/pl_function.hpp"
#include "subcone/rational.hpp"

namespace subcone {

/// Square matrix of exact distances between n labelled points.
///
/// Construction checks shape, symmetry, the zero diagonal and positive
/// off-diagonal entries. The four-point condition is left to check_tree_metric.
class TreeMetric {
public:
    TreeMetric() = default;
    explicit TreeMetric(std::vector<std::vector<Rational>> rows);

    std::size_t size() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::vector<std::vector<Rational>> rows() const;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

struct TreeMetricViolation {
    enum class Kind { triangle, four_point };
    Kind kind;
    /// Offending indices (0-based); for triangle violations the last entry repeats.
    std::array<std::size_t, 4> indices;
};

/// Empty on success, else the first violated triple or quadruple in
/// lexicographic order.
std::optional<TreeMetricViolation> check_tree_metric(const TreeMetric& a);

/// Gromov product (a1i + a1j - aij) / 2: distance from the base vertex to the
/// branch point of i and j. Throws DomainError when negative.
Rational branch_abscissa(const Rational& a1i, const Rational& a1j, const Rational& aij);

/// Strictly increasing slopes k_1 < k_2 < ... used for new branches.
class SlopeSchedule {
public:
    /// Default schedule k_n = n.
    SlopeSchedule() = default;
    /// Throws InvariantError if not strictly increasing.
    explicit SlopeSchedule(std::vector<Rational> slopes);

    /// k_n for n >= 1.
    Rational slope(std::size_t n) const;
    bool is_default() const { return slopes_.empty(); }
    const std::vector<Rational>& explicit_slopes() const { return slopes_; }

private:
    std::vector<Rational> slopes_;
};

/// Streaming form of the brushing construction: vertices arrive one at a
/// time with their distances to every earlier vertex. Vertex 0 is the zero
/// function; each later vertex continues the already-built function it
/// shares the longest prefix with, branching off with the next slope.
class Brusher {
public:
    explicit Brusher(SlopeSchedule slopes = {});

    /// distances[j] is the distance to vertex j, for every j already inserted.
    /// Throws InvariantError if the new vertex cannot be placed isometrically.
    const PLFunction& insert(const std::vector<Rational>& distances);

    const std::vector<PLFunction>& functions() const { return functions_; }

private:
    SlopeSchedule slopes_;
    std::vector<PLFunction> functions_;
};

/// Isometric embedding of a finite tree metric into S.
/// Throws InvariantError if the matrix is not a tree metric.
std::vector<PLFunction> brush(const TreeMetric& a, const SlopeSchedule& slopes = {});

/// Image under the isometric inclusion D -> S: the PL function whose slope
/// on [a_k, a_{k+1}] is the running sum of the support values up to a_k.
PLFunction embed_discrete(const DiscreteFunction& g);

/// max_{i,j} |distance(f_i, f_j) - a_ij|. Throws DomainError on size mismatch.
Rational verify_embedding(const TreeMetric& a, const std::vector<PLFunction>& fs);

}  // namespace subcone
