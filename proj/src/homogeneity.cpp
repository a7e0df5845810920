#include "subcone/homogeneity.hpp"

#include "subcone/core_tree.hpp"

namespace subcone {

Rational g_slope(unsigned n)
{
    const Rational p = Rational::pow2(static_cast<int>(n));
    return (p - Rational(1)) / p;
}

PLFunction g_function(unsigned n, const Rational& length) { return PLFunction::linear(g_slope(n), length); }

std::optional<unsigned> g_index(const Rational& slope)
{
    // 1 - slope must be 1/2^n with n >= 0.
    const Rational gap = Rational(1) - slope;
    if (gap.sign() <= 0 || Rational(1) < gap) {
        return std::nullopt;
    }
    const Rational inv = Rational(1) / gap;
    if (!inv.is_integer()) {
        return std::nullopt;
    }
    const mpz_class& z = inv.raw().get_num();
    if (mpz_popcount(z.get_mpz_t()) != 1) {
        return std::nullopt;
    }
    return static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2) - 1);
}

namespace {

// Moves a branch that starts along g_n onto g_{n+1}; any other start is kept.
PLFunction shift_branch(const PLFunction& h)
{
    if (h.rho().is_zero()) {
        return h;
    }
    if (auto n = g_index(h.first_slope())) {
        return h.plus_linear(g_slope(*n + 1) - g_slope(*n));
    }
    return h;
}

}  // namespace

PLFunction homogenize(const PLFunction& f0, const PLFunction& f)
{
    const Rational a = segregation_moment(f0, f).s;
    const PLFunction branch = shift_branch(f.tail_from(a));
    return PLFunction::zero(f0.rho() - a).concatenated(branch);
}

Rational homogenize_pairwise_check(const PLFunction& f0, const PLFunction& f, const PLFunction& g)
{
    return (distance(homogenize(f0, f), homogenize(f0, g)) - distance(f, g)).abs();
}

}  // namespace subcone
