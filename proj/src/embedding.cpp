#include "subcone/embedding.hpp"

#include <string>

#include "subcone/core_tree.hpp"
#include "subcone/errors.hpp"

namespace subcone {

TreeMetric::TreeMetric(std::vector<std::vector<Rational>> rows) : n_(rows.size())
{
    a_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            throw InvariantError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(n_));
        }
        for (auto& x : rows[i]) {
            a_.push_back(std::move(x));
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(*this)(i, i).is_zero()) {
            throw InvariantError("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") is nonzero");
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                throw InvariantError("entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                                     std::to_string(j) + "," + std::to_string(i) + ") differ");
            }
            if ((*this)(i, j).sign() <= 0) {
                throw InvariantError("off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is not positive (duplicate or negative distance)");
            }
        }
    }
}

std::vector<std::vector<Rational>> TreeMetric::rows() const
{
    std::vector<std::vector<Rational>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

std::optional<TreeMetricViolation> check_tree_metric(const TreeMetric& a)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (a(i, j) + a(j, k) < a(i, k) || a(i, j) + a(i, k) < a(j, k) || a(i, k) + a(j, k) < a(i, j)) {
                    return TreeMetricViolation{TreeMetricViolation::Kind::triangle, {i, j, k, k}};
                }
            }
        }
    }
    // The two largest of the three pairing sums must coincide.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Rational aij_plus = a(i, j);
                const Rational aik_plus = a(i, k);
                const Rational ajk_plus = a(j, k);
                for (std::size_t l = k + 1; l < n; ++l) {
                    const Rational p1 = aij_plus + a(k, l);
                    const Rational p2 = aik_plus + a(j, l);
                    const Rational p3 = a(i, l) + ajk_plus;
                    const Rational& top = max(p1, max(p2, p3));
                    const int hits = static_cast<int>(p1 == top) + static_cast<int>(p2 == top) +
                                     static_cast<int>(p3 == top);
                    if (hits < 2) {
                        return TreeMetricViolation{TreeMetricViolation::Kind::four_point, {i, j, k, l}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

Rational branch_abscissa(const Rational& a1i, const Rational& a1j, const Rational& aij)
{
    Rational g = (a1i + a1j - aij) / Rational(2);
    if (g.sign() < 0) {
        throw DomainError("negative branch abscissa " + g.str() + ": triangle inequality fails");
    }
    return g;
}

SlopeSchedule::SlopeSchedule(std::vector<Rational> slopes) : slopes_(std::move(slopes))
{
    for (std::size_t i = 1; i < slopes_.size(); ++i) {
        if (!(slopes_[i - 1] < slopes_[i])) {
            throw InvariantError("slope schedule not strictly increasing at position " + std::to_string(i + 1) +
                                 ": " + slopes_[i - 1].str() + " then " + slopes_[i].str());
        }
    }
}

Rational SlopeSchedule::slope(std::size_t n) const
{
    if (n == 0) {
        throw DomainError("slope schedule is indexed from 1");
    }
    if (slopes_.empty()) {
        return Rational(static_cast<std::int64_t>(n));
    }
    if (n > slopes_.size()) {
        throw DomainError("slope schedule has " + std::to_string(slopes_.size()) + " entries, k_" +
                          std::to_string(n) + " requested");
    }
    return slopes_[n - 1];
}

Brusher::Brusher(SlopeSchedule slopes) : slopes_(std::move(slopes)) {}

const PLFunction& Brusher::insert(const std::vector<Rational>& distances)
{
    const std::size_t v = functions_.size();
    if (distances.size() != v) {
        throw DomainError("vertex " + std::to_string(v) + " needs " + std::to_string(v) + " distances, got " +
                          std::to_string(distances.size()));
    }
    if (v == 0) {
        functions_.emplace_back();
        return functions_.back();
    }

    // Distances to the base vertex are the domain lengths.
    const Rational& rho = distances[0];
    std::size_t host = 0;
    Rational best(0);
    for (std::size_t j = 1; j < v; ++j) {
        Rational g = branch_abscissa(rho, functions_[j].rho(), distances[j]);
        if (best < g) {
            best = std::move(g);
            host = j;
        }
    }
    if (functions_[host].rho() < best || rho < best) {
        throw InvariantError("vertex " + std::to_string(v) + ": branch point beyond the end of vertex " +
                             std::to_string(host));
    }
    PLFunction f = functions_[host].restricted(best).extended(slopes_.slope(v), rho);
    for (std::size_t j = 0; j < v; ++j) {
        if (distance(f, functions_[j]) != distances[j]) {
            throw InvariantError("vertex " + std::to_string(v) + ": distance to vertex " + std::to_string(j) +
                                 " cannot be realized (not a tree metric)");
        }
    }
    functions_.push_back(std::move(f));
    return functions_.back();
}

std::vector<PLFunction> brush(const TreeMetric& a, const SlopeSchedule& slopes)
{
    if (auto bad = check_tree_metric(a)) {
        const auto& q = bad->indices;
        throw InvariantError(std::string(bad->kind == TreeMetricViolation::Kind::triangle ? "triangle inequality"
                                                                                          : "four-point condition") +
                             " fails on (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                             std::to_string(q[2]) + "," + std::to_string(q[3]) + ")");
    }
    Brusher b(slopes);
    for (std::size_t v = 0; v < a.size(); ++v) {
        std::vector<Rational> row;
        row.reserve(v);
        for (std::size_t j = 0; j < v; ++j) {
            row.push_back(a(v, j));
        }
        b.insert(row);
    }
    return b.functions();
}

PLFunction embed_discrete(const DiscreteFunction& g)
{
    std::vector<Breakpoint> pts{{Rational(0), Rational(0)}};
    Rational slope(0);
    Rational value(0);
    Rational at(0);
    for (const auto& p : g.support()) {
        value += slope * (p.t - at);
        at = p.t;
        pts.push_back({at, value});
        slope += p.a;
    }
    if (at < g.rho()) {
        value += slope * (g.rho() - at);
        pts.push_back({g.rho(), value});
    }
    return PLFunction(std::move(pts));
}

Rational verify_embedding(const TreeMetric& a, const std::vector<PLFunction>& fs)
{
    if (fs.size() != a.size()) {
        throw DomainError("embedding has " + std::to_string(fs.size()) + " functions for " +
                          std::to_string(a.size()) + " vertices");
    }
    Rational worst(0);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            worst = max(worst, (distance(fs[i], fs[j]) - a(i, j)).abs());
        }
    }
    return worst;
}

}  // namespace subcone
