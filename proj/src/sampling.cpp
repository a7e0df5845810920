#include "subcone/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "subcone/homogeneity.hpp"

namespace subcone::sampling {

std::uint64_t uniform_index(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

bool coin(Rng& rng, unsigned percent) { return uniform_index(rng, 100) < percent; }

Rational rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den)
{
    const auto num = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(2 * max_abs_num + 1))) -
                     max_abs_num;
    const auto den = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(max_den))) + 1;
    return Rational(num, den);
}

Rational positive_rational(Rng& rng, std::int64_t max_value, std::int64_t max_den)
{
    const auto den = static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(max_den))) + 1;
    const auto num =
        static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(max_value * den))) + 1;
    return Rational(num, den);
}

Rational slope(Rng& rng)
{
    switch (uniform_index(rng, 6)) {
    case 0:
        return Rational(0);
    case 1:
        return g_slope(static_cast<unsigned>(uniform_index(rng, 4)));
    default:
        return rational(rng, 6, 4);
    }
}

PLFunction pl_function(Rng& rng, unsigned max_segments)
{
    PLFunction f;
    const auto segments = uniform_index(rng, max_segments + 1);
    for (std::uint64_t i = 0; i < segments; ++i) {
        f = f.extended(slope(rng), f.rho() + positive_rational(rng, 2, 4));
    }
    return f;
}

namespace {

Rational random_cut(Rng& rng, const PLFunction& f)
{
    if (f.rho().is_zero()) {
        return Rational(0);
    }
    const auto& pts = f.breakpoints();
    switch (uniform_index(rng, 3)) {
    case 0:
        return pts[uniform_index(rng, pts.size())].t;
    case 1:
        return f.rho();
    default:
        return f.rho() * Rational(static_cast<std::int64_t>(uniform_index(rng, 8)), 8);
    }
}

}  // namespace

std::vector<PLFunction> pl_family(Rng& rng, std::size_t count, unsigned max_segments)
{
    std::vector<PLFunction> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (out.empty() || coin(rng, 15)) {
            out.push_back(pl_function(rng, max_segments));
            continue;
        }
        const PLFunction& parent = out[uniform_index(rng, out.size())];
        PLFunction f = parent.restricted(random_cut(rng, parent));
        const auto extra = uniform_index(rng, max_segments + 1);
        for (std::uint64_t k = 0; k < extra; ++k) {
            f = f.extended(slope(rng), f.rho() + positive_rational(rng, 2, 4));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<PLFunction> distinct_pl_family(Rng& rng, std::size_t count, unsigned max_segments)
{
    std::vector<PLFunction> out;
    while (out.size() < count) {
        for (auto& f : pl_family(rng, count, max_segments)) {
            if (out.size() < count && std::find(out.begin(), out.end(), f) == out.end()) {
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

std::vector<PLFunction> extension_chain(Rng& rng, const PLFunction& base, std::size_t count)
{
    std::vector<PLFunction> out;
    PLFunction f = base;
    for (std::size_t i = 0; i < count; ++i) {
        f = f.extended(slope(rng), f.rho() + positive_rational(rng, 1, 4));
        out.push_back(f);
    }
    return out;
}

DiscreteFunction discrete_function(Rng& rng, unsigned max_support)
{
    const Rational rho = coin(rng, 5) ? Rational(0) : positive_rational(rng, 4, 4);
    std::vector<SupportPoint> support;
    if (rho.sign() > 0) {
        const auto k = uniform_index(rng, max_support + 1);
        std::vector<Rational> times;
        for (std::uint64_t i = 0; i < k; ++i) {
            Rational t = rho * Rational(static_cast<std::int64_t>(uniform_index(rng, 15)) + 1, 16);
            if (std::find(times.begin(), times.end(), t) == times.end()) {
                times.push_back(std::move(t));
            }
        }
        std::sort(times.begin(), times.end());
        for (auto& t : times) {
            Rational a;
            while (a.is_zero()) {
                a = rational(rng, 4, 3);
            }
            support.push_back({std::move(t), std::move(a)});
        }
    }
    return DiscreteFunction(rho, std::move(support));
}

std::pair<DiscreteFunction, DiscreteFunction> discrete_pair(Rng& rng, unsigned max_support)
{
    DiscreteFunction a = discrete_function(rng, max_support);
    if (coin(rng, 30)) {
        return {a, discrete_function(rng, max_support)};
    }
    // Keep a prefix of a's support and its domain up to a cut, then diverge.
    const Rational cut = a.rho() * Rational(static_cast<std::int64_t>(uniform_index(rng, 9)), 8);
    std::vector<SupportPoint> support;
    for (const auto& p : a.support()) {
        if (p.t < cut) {
            support.push_back(p);
        }
    }
    const Rational rho = cut + positive_rational(rng, 2, 4);
    const auto extra = uniform_index(rng, 3);
    for (std::uint64_t i = 0; i < extra; ++i) {
        const Rational t = cut + (rho - cut) * Rational(static_cast<std::int64_t>(uniform_index(rng, 7)) + 1, 8);
        if (t.sign() > 0 && (support.empty() || support.back().t < t)) {
            Rational v;
            while (v.is_zero()) {
                v = rational(rng, 4, 3);
            }
            support.push_back({t, std::move(v)});
        }
    }
    return {a, DiscreteFunction(rho, std::move(support))};
}

TreeMetric tree_metric(Rng& rng, std::size_t n)
{
    // Random rooted tree with positive rational edge weights.
    const std::size_t nodes = n + static_cast<std::size_t>(uniform_index(rng, n + 1));
    std::vector<std::size_t> parent(nodes, 0);
    std::vector<Rational> depth(nodes);
    std::vector<std::size_t> level(nodes, 0);
    for (std::size_t v = 1; v < nodes; ++v) {
        parent[v] = static_cast<std::size_t>(uniform_index(rng, v));
        depth[v] = depth[parent[v]] + positive_rational(rng, 3, 4);
        level[v] = level[parent[v]] + 1;
    }
    std::vector<std::size_t> pick(nodes);
    std::iota(pick.begin(), pick.end(), 0);
    for (std::size_t i = nodes; i > 1; --i) {
        std::swap(pick[i - 1], pick[uniform_index(rng, i)]);
    }
    pick.resize(n);

    auto lca = [&](std::size_t a, std::size_t b) {
        while (a != b) {
            if (level[a] < level[b]) {
                std::swap(a, b);
            }
            a = parent[a];
        }
        return a;
    };
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t c = lca(pick[i], pick[j]);
            rows[i][j] = rows[j][i] = depth[pick[i]] + depth[pick[j]] - depth[c] - depth[c];
        }
    }
    return TreeMetric(std::move(rows));
}

}  // namespace subcone::sampling
