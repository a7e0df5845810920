#pragma once

#include <array>
#include <string_view>

#include "subcone/discrete_function.hpp"
#include "subcone/pl_function.hpp"
#include "subcone/rational.hpp"

namespace subcone {

enum class Relation {
    identical,
    first_extends_second,
    second_extends_first,
    branch,
};

std::string_view to_string(Relation r);

struct SegregationResult {
    Rational s;  ///< moment of segregation
    Relation relation;
};

/// Supremum of the times up to which f1 and f2 agree. Computed exactly by
/// walking the merged breakpoint sequence: both functions are linear between
/// merged nodes and agree at 0, so they agree on a merged segment iff they
/// agree at its right end.
SegregationResult segregation_moment(const PLFunction& f1, const PLFunction& f2);

/// Segregation metric (rho1 - s) + (rho2 - s).
Rational distance(const PLFunction& f1, const PLFunction& f2);

/// First time where the two discrete functions disagree, capped at min(rho).
SegregationResult segregation_moment(const DiscreteFunction& g1, const DiscreteFunction& g2);

Rational distance_discrete(const DiscreteFunction& g1, const DiscreteFunction& g2);

/// Point at arc length x along the unique geodesic from f1 to f2:
/// retreat along f1 to the common prefix, then advance along f2.
/// Throws DomainError unless 0 <= x <= distance(f1, f2).
PLFunction geodesic_point(const PLFunction& f1, const PLFunction& f2, const Rational& x);

/// d(f1,f2) + d(f3,f4) - max(d(f1,f3) + d(f2,f4), d(f1,f4) + d(f2,f3)).
/// Non-positive for every labeling in a real tree.
Rational four_point_defect(const PLFunction& f1, const PLFunction& f2, const PLFunction& f3,
                           const PLFunction& f4);

/// The defect for the three pairings {12|34}, {13|24}, {14|23}.
std::array<Rational, 3> four_point_defects(const PLFunction& f1, const PLFunction& f2, const PLFunction& f3,
                                           const PLFunction& f4);

/// Exact evaluation; alias of PLFunction::evaluate kept for the operation table.
inline Rational evaluate(const PLFunction& f, const Rational& t) { return f.evaluate(t); }

}  // namespace subcone
