#include "subcone/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "subcone/core_tree.hpp"
#include "subcone/errors.hpp"

namespace subcone {

namespace {

// Dyadic fractions in (0,1) in breadth-first order: 1/2, 1/4, 3/4, 1/8, ...
Rational dyadic_fraction(std::size_t index)
{
    int level = 1;
    std::size_t count = 1;
    while (index >= count) {
        index -= count;
        ++level;
        count *= 2;
    }
    return Rational(static_cast<std::int64_t>(2 * index + 1)) / Rational::pow2(level);
}

// First breakpoint time of either function strictly after s, capped at cap.
Rational next_node(const PLFunction& f1, const PLFunction& f2, const Rational& s, const Rational& cap)
{
    Rational best = cap;
    for (const auto* f : {&f1, &f2}) {
        for (const auto& p : f->breakpoints()) {
            if (s < p.t) {
                best = min(best, p.t);
                break;
            }
        }
    }
    return best;
}

std::string pair_name(std::size_t i, std::size_t j) { return std::to_string(i) + "-" + std::to_string(j); }

}  // namespace

bool ConvergenceReport::nonincreasing_after(std::size_t burn_in, Real floor) const
{
    for (std::size_t i = burn_in + 1; i < rows.size(); ++i) {
        if (rows[i].error > rows[i - 1].error + floor) {
            return false;
        }
    }
    return true;
}

std::optional<Real> ConvergenceReport::fitted_order(std::size_t burn_in, Real min_error) const
{
    std::vector<std::pair<Real, Real>> pts;
    for (std::size_t i = burn_in; i < rows.size(); ++i) {
        if (rows[i].error > min_error) {
            pts.emplace_back(std::log(rows[i].eps), std::log(rows[i].error));
        }
    }
    if (pts.size() < 3) {
        return std::nullopt;
    }
    Real mx = 0;
    Real my = 0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<Real>(pts.size());
    my /= static_cast<Real>(pts.size());
    Real sxy = 0;
    Real sxx = 0;
    for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxy / sxx;
}

ConvergenceReport convergence_report(const DiscreteFunction& g1, const DiscreteFunction& g2,
                                     const EpsilonSchedule& schedule)
{
    ConvergenceReport out;
    const Real target = distance_discrete(g1, g2).to_long_double();
    for (const Real eps : schedule.values()) {
        const WitnessPair w = witness_pair(g1, g2, eps);
        const Real d = polar_distance_logdomain(w.first.rho, w.second.rho, w.delta_phi);
        out.rows.push_back({eps, d, eps * d, target, std::fabs(eps * d - target)});
    }
    return out;
}

Rational sample_window(unsigned stage) { return Rational::pow2(-static_cast<int>(stage) - 1); }

SamplePlan make_sample_plan(std::span<const PLFunction> fs, unsigned stage)
{
    if (stage == 0) {
        throw DomainError("stages are numbered from 1");
    }
    SamplePlan plan;
    plan.stage = stage;
    const Rational window = sample_window(stage);
    std::set<Rational> used;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const SegregationResult seg = segregation_moment(fs[i], fs[j]);
            if (seg.relation == Relation::identical) {
                throw DomainError("sample plan needs distinct functions; inputs " + pair_name(i, j) + " are equal");
            }
            // On a branch the functions differ on (s, next node]; on an
            // extension the value condition is vacuous past the shorter end.
            Rational width = window;
            if (seg.relation == Relation::branch) {
                width = min(window, next_node(fs[i], fs[j], seg.s, min(fs[i].rho(), fs[j].rho())) - seg.s);
            }
            Rational t;
            for (std::size_t q = 0;; ++q) {
                t = seg.s + width * dyadic_fraction(q);
                if (!used.contains(t)) {
                    break;
                }
            }
            used.insert(t);
            plan.pairs.push_back({i, j, seg.s, t});
        }
    }
    plan.times.assign(used.begin(), used.end());
    return plan;
}

DiscreteFunction discretize(const PLFunction& f, const SamplePlan& plan)
{
    std::vector<SupportPoint> support;
    for (const auto& t : plan.times) {
        if (!(t < f.rho())) {
            break;
        }
        Rational v = f.evaluate(t);
        if (!v.is_zero()) {
            support.push_back({t, std::move(v)});
        }
    }
    return DiscreteFunction(f.rho(), std::move(support));
}

bool StageRecord::within_bound() const
{
    return std::all_of(pairs.begin(), pairs.end(), [&](const PairRecord& p) { return p.err_vs_target < bound; });
}

Real StageRecord::max_error() const
{
    Real worst = 0;
    for (const auto& p : pairs) {
        worst = std::max(worst, p.err_vs_target);
    }
    return worst;
}

StageRecord run_stage(std::span<const PLFunction> fs, unsigned stage, const EpsilonSchedule& schedule,
                      std::size_t start_index)
{
    const SamplePlan plan = make_sample_plan(fs, stage);
    std::vector<DiscreteFunction> gs;
    gs.reserve(fs.size());
    for (const auto& f : fs) {
        gs.push_back(discretize(f, plan));
    }

    StageRecord rec;
    rec.stage = stage;
    rec.bound = std::ldexp(Real(1), 1 - static_cast<int>(stage));
    for (const auto& p : plan.pairs) {
        rec.pairs.push_back({p.first, p.second, distance(fs[p.first], fs[p.second]),
                             distance_discrete(gs[p.first], gs[p.second]), 0, 0, 0});
    }

    const Real target = std::ldexp(Real(1), -static_cast<int>(stage));
    for (std::size_t i = start_index; i < schedule.size(); ++i) {
        const Real eps = schedule[i];
        bool ok = true;
        for (auto& p : rec.pairs) {
            p.scaled_distance = scaled_witness_distance(gs[p.first], gs[p.second], eps);
            p.err_vs_surrogate = std::fabs(p.scaled_distance - p.surrogate.to_long_double());
            if (!(p.err_vs_surrogate <= target)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (auto& p : rec.pairs) {
                p.err_vs_target = std::fabs(p.scaled_distance - p.target.to_long_double());
            }
            rec.eps_index = i;
            rec.eps = eps;
            return rec;
        }
    }
    throw VerificationError("stage " + std::to_string(stage) + ": epsilon schedule exhausted" +
                            (schedule.size() > start_index
                                 ? " (smallest tried " + std::to_string(static_cast<double>(schedule.values().back())) + ")"
                                 : std::string(" (no entries left)")));
}

std::vector<StageRecord> run_all_stages(std::span<const PLFunction> fs, unsigned max_stage,
                                        const EpsilonSchedule& schedule)
{
    std::vector<StageRecord> out;
    std::size_t start = 0;
    for (unsigned n = 1; n <= max_stage; ++n) {
        out.push_back(run_stage(fs, n, schedule, start));
        start = out.back().eps_index + 1;
    }
    return out;
}

CauchySpec::CauchySpec(PLFunction prefix, Rational length, Rational amplitude)
    : prefix_(std::move(prefix)), length_(std::move(length)), amplitude_(std::move(amplitude))
{
    if (length_.sign() <= 0) {
        throw InvariantError("Cauchy chain needs a positive length");
    }
    if (amplitude_.is_zero()) {
        throw InvariantError("Cauchy chain needs a nonzero amplitude");
    }
}

CauchySpec CauchySpec::zigzag() { return CauchySpec(PLFunction(), Rational(1), Rational(1)); }

PLFunction CauchySpec::member(unsigned k) const
{
    std::vector<Breakpoint> pts = prefix_.breakpoints();
    const Rational t0 = prefix_.rho();
    const Rational v0 = pts.back().v;
    for (unsigned j = 1; j <= k; ++j) {
        pts.push_back({t0 + length_ * (Rational(1) - Rational::pow2(-static_cast<int>(j))),
                       j % 2 == 1 ? v0 + amplitude_ : v0});
    }
    return PLFunction(std::move(pts));
}

Rational CauchySpec::rho(unsigned k) const
{
    return prefix_.rho() + length_ * (Rational(1) - Rational::pow2(-static_cast<int>(k)));
}

Rational CauchySpec::limit_rho() const { return prefix_.rho() + length_; }

Rational cauchy_distances(const CauchySpec& spec, unsigned k, unsigned m)
{
    return distance(spec.member(k), spec.member(m));
}

Rational limit_distance(const CauchySpec& a, const CauchySpec& b)
{
    if (a == b) {
        return Rational(0);
    }
    // Segregation of the members is non-decreasing in k and freezes once
    // both chains run past the point where they part.
    for (unsigned k = 0; k <= 64; ++k) {
        const PLFunction fa = a.member(k);
        const PLFunction fb = b.member(k);
        const SegregationResult seg = segregation_moment(fa, fb);
        if (seg.s < min(fa.rho(), fb.rho())) {
            return a.limit_rho() + b.limit_rho() - seg.s - seg.s;
        }
    }
    throw VerificationError("limit segregation of two Cauchy chains not resolved within 64 members");
}

StageRecord completion_witness(std::span<const CauchySpec> seqs, unsigned r, const EpsilonSchedule& schedule,
                               Real previous_eps)
{
    if (r == 0) {
        throw DomainError("completion stages are numbered from 1");
    }
    // Member index whose distance to the limit, limit_rho - rho_k = length 2^{-k},
    // is below 1/2^{r+1} for every chain.
    const Rational closeness = Rational::pow2(-static_cast<int>(r) - 1);
    unsigned member = 0;
    for (const auto& spec : seqs) {
        while (!(spec.limit_rho() - spec.rho(member) < closeness)) {
            ++member;
        }
    }

    // Identical chains share one representative.
    std::vector<PLFunction> reps;
    std::vector<std::size_t> rep_of(seqs.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        PLFunction f = seqs[i].member(member);
        auto it = std::find(reps.begin(), reps.end(), f);
        rep_of[i] = static_cast<std::size_t>(it - reps.begin());
        if (it == reps.end()) {
            reps.push_back(std::move(f));
        }
    }

    std::size_t start = 0;
    while (start < schedule.size() && !(schedule[start] < previous_eps / 2)) {
        ++start;
    }
    const StageRecord inner = run_stage(reps, r + 1, schedule, start);

    StageRecord rec;
    rec.stage = r;
    rec.eps_index = inner.eps_index;
    rec.eps = inner.eps;
    rec.bound = std::ldexp(Real(1), 1 - static_cast<int>(r));
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            PairRecord p{i, j, limit_distance(seqs[i], seqs[j]), Rational(0), 0, 0, 0};
            const std::size_t a = std::min(rep_of[i], rep_of[j]);
            const std::size_t b = std::max(rep_of[i], rep_of[j]);
            if (a != b) {
                const auto hit = std::find_if(inner.pairs.begin(), inner.pairs.end(), [&](const PairRecord& q) {
                    return q.first == a && q.second == b;
                });
                p.surrogate = hit->target;
                p.scaled_distance = hit->scaled_distance;
            }
            p.err_vs_surrogate = std::fabs(p.scaled_distance - p.surrogate.to_long_double());
            p.err_vs_target = std::fabs(p.scaled_distance - p.target.to_long_double());
            rec.pairs.push_back(std::move(p));
        }
    }
    return rec;
}

std::vector<StageRecord> run_completion(std::span<const CauchySpec> seqs, unsigned max_r,
                                        const EpsilonSchedule& schedule)
{
    std::vector<StageRecord> out;
    Real previous = std::numeric_limits<Real>::infinity();
    for (unsigned r = 1; r <= max_r; ++r) {
        out.push_back(completion_witness(seqs, r, schedule, previous));
        previous = out.back().eps;
    }
    return out;
}

}  // namespace subcone
