#pragma once

#include <optional>

#include "subcone/pl_function.hpp"
#include "subcone/rational.hpp"

namespace subcone {

/// Slope (2^n - 1) / 2^n of g_n.
Rational g_slope(unsigned n);

/// g_n(t) = (2^n - 1) t / 2^n on [0, length]. g_0 is the zero function and
/// distinct members segregate at 0.
PLFunction g_function(unsigned n, const Rational& length);

/// Index n with g_slope(n) == slope, if any.
std::optional<unsigned> g_index(const Rational& slope);

/// Self-isometry of S that sends the base function f0 to the zero element.
///
/// With a the segregation moment of f0 and f and h(tau) = f(a + tau) - f0(a)
/// the part of f past the branch point, the image is the zero function on
/// [0, rho0 - a] followed by h. When h starts out along some g_n it is
/// re-routed along g_{n+1} (h - g_n + g_{n+1}), which keeps every branch
/// leaving the zero prefix, where the images of prefixes of f0 live.
PLFunction homogenize(const PLFunction& f0, const PLFunction& f);

/// |d(F f, F g) - d(f, g)| for the isometry F based at f0; zero for an isometry.
Rational homogenize_pairwise_check(const PLFunction& f0, const PLFunction& f, const PLFunction& g);

}  // namespace subcone
