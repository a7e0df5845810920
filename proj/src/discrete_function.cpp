#include "subcone/discrete_function.hpp"

#include <algorithm>
#include <string>

#include "subcone/errors.hpp"

namespace subcone {

DiscreteFunction::DiscreteFunction(Rational rho, std::vector<SupportPoint> support)
    : rho_(std::move(rho)), support_(std::move(support))
{
    if (rho_.sign() < 0) {
        throw InvariantError("negative domain length " + rho_.str());
    }
    for (std::size_t i = 0; i < support_.size(); ++i) {
        const auto& p = support_[i];
        const std::string where = "support " + std::to_string(i) + ": ";
        if (!(p.t.sign() > 0 && p.t < rho_)) {
            throw InvariantError(where + "time " + p.t.str() + " not inside (0, " + rho_.str() + ")");
        }
        if (p.a.is_zero()) {
            throw InvariantError(where + "zero value stored in support");
        }
        if (i > 0 && !(support_[i - 1].t < p.t)) {
            throw InvariantError(where + "time " + p.t.str() + " does not strictly exceed " +
                                 support_[i - 1].t.str());
        }
    }
}

Rational DiscreteFunction::value_at(const Rational& t) const
{
    auto it = std::lower_bound(support_.begin(), support_.end(), t,
                               [](const SupportPoint& p, const Rational& x) { return p.t < x; });
    if (it != support_.end() && it->t == t) {
        return it->a;
    }
    return Rational(0);
}

}  // namespace subcone
