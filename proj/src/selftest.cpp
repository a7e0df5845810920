#include "subcone/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "subcone/core_tree.hpp"
#include "subcone/embedding.hpp"
#include "subcone/homogeneity.hpp"
#include "subcone/hyperbolic.hpp"
#include "subcone/io.hpp"
#include "subcone/sampling.hpp"
#include "subcone/verification.hpp"

namespace subcone {

namespace {

using sampling::Rng;

struct Outcome {
    std::size_t checks = 0;
    std::string failure;  // empty when every check held

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failure.empty()) {
            failure = what + " (check " + std::to_string(checks) + ")";
        }
    }
};

Outcome metric_axioms(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        const auto fs = sampling::pl_family(rng, 3);
        const Rational ab = distance(fs[0], fs[1]);
        const Rational bc = distance(fs[1], fs[2]);
        const Rational ac = distance(fs[0], fs[2]);
        o.expect(ab == distance(fs[1], fs[0]), "symmetry");
        o.expect(ab.sign() >= 0, "non-negativity");
        o.expect((ab.is_zero()) == (fs[0] == fs[1]), "identity of indiscernibles");
        o.expect(!(ab + bc < ac), "triangle inequality");
    }
    return o;
}

Outcome geodesics(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        const auto fs = sampling::pl_family(rng, 2);
        const Rational d = distance(fs[0], fs[1]);
        const Rational x = d * Rational(static_cast<std::int64_t>(sampling::uniform_index(rng, 17)), 16);
        const Rational y = d * Rational(static_cast<std::int64_t>(sampling::uniform_index(rng, 17)), 16);
        o.expect(distance(geodesic_point(fs[0], fs[1], x), geodesic_point(fs[0], fs[1], y)) == (x - y).abs(),
                 "geodesic isometry");
        o.expect(geodesic_point(fs[0], fs[1], Rational(0)) == fs[0], "geodesic start");
        o.expect(geodesic_point(fs[0], fs[1], d) == fs[1], "geodesic end");
    }
    return o;
}

Outcome four_point(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        const auto fs = sampling::pl_family(rng, 4);
        for (const auto& d : four_point_defects(fs[0], fs[1], fs[2], fs[3])) {
            o.expect(d.sign() <= 0, "four-point defect");
        }
    }
    return o;
}

Outcome normalization(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        const auto fs = sampling::pl_family(rng, 2);
        // Re-insert a collinear midpoint on every segment.
        std::vector<Breakpoint> dense;
        const auto& pts = fs[0].breakpoints();
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k > 0) {
                const Rational mid = (pts[k - 1].t + pts[k].t) / Rational(2);
                dense.push_back({mid, fs[0].evaluate(mid)});
            }
            dense.push_back(pts[k]);
        }
        const PLFunction g(dense);
        o.expect(g == fs[0], "collinear merge");
        o.expect(distance(g, fs[1]) == distance(fs[0], fs[1]), "distance after merge");
    }
    return o;
}

Outcome brushing(Rng& rng, bool corrupt)
{
    Outcome o;
    for (int i = 0; i < 20; ++i) {
        const auto n = 1 + sampling::uniform_index(rng, 16);
        const TreeMetric a = sampling::tree_metric(rng, n);
        std::vector<Rational> slopes;
        Rational k = sampling::rational(rng, 3, 2);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            slopes.push_back(k);
            k += corrupt && j == 0 ? Rational(0) : sampling::positive_rational(rng, 2, 3);
        }
        const auto fs = brush(a, SlopeSchedule(slopes));
        o.expect(verify_embedding(a, fs).is_zero(), "brushed embedding is isometric");
        for (std::size_t p = 1; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                o.expect(segregation_moment(fs[p], fs[q]).s == branch_abscissa(a(0, p), a(0, q), a(p, q)),
                         "segregation equals the Gromov product");
            }
        }
        o.expect(verify_embedding(a, brush(a)).is_zero(), "default schedule embedding is isometric");
    }
    return o;
}

Outcome discrete_inclusion(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        const auto [g1, g2] = sampling::discrete_pair(rng);
        o.expect(distance(embed_discrete(g1), embed_discrete(g2)) == distance_discrete(g1, g2),
                 "inclusion of D preserves distance");
    }
    return o;
}

Outcome homogeneity(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        auto fs = sampling::pl_family(rng, 3);
        if (sampling::coin(rng, 40)) {
            const auto chain = sampling::extension_chain(rng, fs[0], 2);
            fs[1] = chain[0];
            fs[2] = chain[1];
        }
        o.expect(homogenize_pairwise_check(fs[0], fs[1], fs[2]).is_zero(), "homogenize preserves distance");
        o.expect(homogenize(fs[0], fs[0]) == PLFunction(), "base goes to zero");
    }
    return o;
}

Outcome hyperbolic_oracles(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 500; ++i) {
        const auto p1 = PolarPoint::from_angle(sampling::positive_rational(rng, 8, 64).to_long_double(),
                                               sampling::rational(rng, 300, 100).to_long_double());
        const auto p2 = PolarPoint::from_angle(sampling::positive_rational(rng, 8, 64).to_long_double(),
                                               sampling::rational(rng, 300, 100).to_long_double());
        const Real direct = polar_distance(p1, p2);
        const Real disk = disk_distance(to_disk(p1), to_disk(p2));
        const Real logd = polar_distance_logdomain(p1, p2);
        o.expect(std::fabs(direct - disk) <= 1e-12L * std::max(Real(1e-300), disk), "polar vs disk");
        o.expect(std::fabs(logd - direct) <= 1e-9L * std::max(Real(1e-300), direct), "log-domain vs direct");
    }
    return o;
}

Outcome convergence(Rng& rng)
{
    Outcome o;
    const EpsilonSchedule eps = EpsilonSchedule::dyadic(8, 20);
    for (int i = 0; i < 5; ++i) {
        const auto [g1, g2] = sampling::discrete_pair(rng);
        const Real last = asymptotic_error(g1, g2, eps[eps.size() - 1]);
        o.expect(last <= 1e-3L, "witness error at the finest scale");
        o.expect(last <= asymptotic_error(g1, g2, eps[0]) + 1e-12L, "witness error shrinks");
    }
    return o;
}

Outcome subcone_envelope(Rng& rng)
{
    Outcome o;
    const EpsilonSchedule eps = EpsilonSchedule::dyadic(1, 64);
    for (int i = 0; i < 3; ++i) {
        const auto fs = sampling::distinct_pl_family(rng, 3);
        for (const auto& rec : run_all_stages(fs, 4, eps)) {
            o.expect(rec.within_bound(), "stage envelope 1/2^(N-1)");
        }
    }
    return o;
}

Outcome cauchy(Rng&)
{
    Outcome o;
    const CauchySpec spec = CauchySpec::zigzag();
    for (unsigned k = 0; k <= 12; ++k) {
        for (unsigned m = k + 1; m <= 12; ++m) {
            o.expect(cauchy_distances(spec, k, m) == Rational::pow2(-static_cast<int>(k)) -
                                                         Rational::pow2(-static_cast<int>(m)),
                     "Cauchy chain distance");
        }
    }
    return o;
}

Outcome round_trip(Rng& rng)
{
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        const PLFunction f = sampling::pl_function(rng);
        o.expect(io::parse_pl_function(io::serialize(f)) == f, "PL function JSON round trip");
        const DiscreteFunction g = sampling::discrete_function(rng);
        o.expect(io::parse_discrete_function(io::serialize(g)) == g, "discrete function JSON round trip");
    }
    return o;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options)
{
    using Property = std::function<Outcome(Rng&)>;
    const std::vector<std::pair<std::string, Property>> props = {
        {"metric-axioms", metric_axioms},
        {"geodesic-isometry", geodesics},
        {"four-point", four_point},
        {"normalization", normalization},
        {"brushing", [&](Rng& r) { return brushing(r, options.corrupt_slopes); }},
        {"discrete-inclusion", discrete_inclusion},
        {"homogeneity", homogeneity},
        {"hyperbolic-oracles", hyperbolic_oracles},
        {"witness-convergence", convergence},
        {"subcone-envelope", subcone_envelope},
        {"cauchy-chain", cauchy},
        {"json-round-trip", round_trip},
    };

    SelftestReport report;
    std::ostringstream out;
    for (std::size_t i = 0; i < props.size(); ++i) {
        // Independent stream per property so one suite's draws never shift another's.
        Rng rng(options.seed * 1000003ULL + i);
        Outcome o;
        try {
            o = props[i].second(rng);
        } catch (const std::exception& e) {
            o.failure = e.what();
        }
        const bool ok = o.failure.empty();
        out << (ok ? "PASS " : "FAIL ") << props[i].first << " checks=" << o.checks;
        if (!ok) {
            out << " : " << o.failure;
            if (report.passed) {
                report.passed = false;
                report.first_failure = props[i].first;
            }
        }
        out << "\n";
    }
    out << (report.passed ? "selftest passed" : "selftest FAILED at " + report.first_failure) << " (seed "
        << options.seed << ")\n";
    report.text = out.str();
    return report;
}

}  // namespace subcone
