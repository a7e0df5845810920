#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subcone/discrete_function.hpp"
#include "subcone/hyperbolic.hpp"
#include "subcone/pl_function.hpp"
#include "subcone/rational.hpp"

namespace subcone {

/// One row of a witness convergence run.
struct ConvergenceRow {
    Real eps;
    Real hyperbolic_distance;  ///< d_X between the witness points
    Real scaled_distance;      ///< eps * d_X
    Real target;               ///< d_D
    Real error;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;

    /// Errors never rise by more than floor between consecutive rows past
    /// the first burn_in rows.
    bool nonincreasing_after(std::size_t burn_in, Real floor) const;

    /// Least-squares slope of log(error) against log(eps) over rows past
    /// burn_in whose error exceeds min_error. Empty if fewer than 3 such rows.
    std::optional<Real> fitted_order(std::size_t burn_in, Real min_error) const;
};

ConvergenceReport convergence_report(const DiscreteFunction& g1, const DiscreteFunction& g2,
                                     const EpsilonSchedule& schedule);

struct PairSample {
    std::size_t first;
    std::size_t second;
    Rational segregation;
    Rational time;  ///< in (segregation, segregation + 1/2^{stage+1})
};

/// Sample times for one stage of the discretization: one time per unordered
/// pair, just past the pair's segregation moment and (when inside both
/// domains) at a point where the two functions differ. All times distinct.
struct SamplePlan {
    unsigned stage = 0;
    std::vector<PairSample> pairs;
    std::vector<Rational> times;  ///< sorted
};

/// Width 1/2^{stage+1} of the admissible window past each segregation moment.
Rational sample_window(unsigned stage);

/// Throws DomainError if two inputs are equal or stage == 0.
SamplePlan make_sample_plan(std::span<const PLFunction> fs, unsigned stage);

/// f sampled at the plan times inside [0, rho), zero values dropped.
DiscreteFunction discretize(const PLFunction& f, const SamplePlan& plan);

struct PairRecord {
    std::size_t first;
    std::size_t second;
    Rational target;      ///< distance being approximated (d_S, or the limit distance)
    Rational surrogate;   ///< distance of the stand-ins the witnesses realize
    Real scaled_distance; ///< eps * d_X(witnesses)
    Real err_vs_surrogate;
    Real err_vs_target;
};

struct StageRecord {
    unsigned stage = 0;
    std::size_t eps_index = 0;
    Real eps = 0;
    Real bound = 0;  ///< every err_vs_target must stay strictly below this
    std::vector<PairRecord> pairs;

    bool within_bound() const;
    Real max_error() const;
};

/// One stage of the finite-subset certificate: discretize at the stage's
/// sample plan, then walk the schedule from start_index until every witness
/// pair is within 1/2^stage of its discretized distance. The recorded
/// errors against d_S then sit under 1/2^{stage-1}.
/// Throws VerificationError if the schedule runs out first.
StageRecord run_stage(std::span<const PLFunction> fs, unsigned stage, const EpsilonSchedule& schedule,
                      std::size_t start_index = 0);

/// Stages 1..max_stage with strictly decreasing chosen eps.
std::vector<StageRecord> run_all_stages(std::span<const PLFunction> fs, unsigned max_stage,
                                        const EpsilonSchedule& schedule);

/// Extension chain f_0, f_1, ... : a fixed prefix followed by a zigzag whose
/// k-th corner sits at prefix_rho + length (1 - 2^{-k}), alternating between
/// +amplitude and 0 relative to the prefix's end value. Slopes grow without
/// bound, so the chain is Cauchy in S with no limit in S.
class CauchySpec {
public:
    CauchySpec(PLFunction prefix, Rational length, Rational amplitude);

    /// Zero prefix, unit length and amplitude: domains [0, 1 - 2^{-k}].
    static CauchySpec zigzag();

    PLFunction member(unsigned k) const;
    Rational rho(unsigned k) const;
    Rational limit_rho() const;

    friend bool operator==(const CauchySpec&, const CauchySpec&) = default;

private:
    PLFunction prefix_;
    Rational length_;
    Rational amplitude_;
};

/// Exact d_S(f_k, f_m) along one chain.
Rational cauchy_distances(const CauchySpec& spec, unsigned k, unsigned m);

/// Distance between the limits of two chains in the completion.
/// Throws VerificationError if the chains agree on every member inspected.
Rational limit_distance(const CauchySpec& a, const CauchySpec& b);

/// One step of the completion procedure: choose members within 1/2^{r+1}
/// of their limits, run the stage-(r+1) certificate on them, and compare the
/// witnesses against the limit distances. Only schedule entries below
/// previous_eps / 2 are used.
StageRecord completion_witness(std::span<const CauchySpec> seqs, unsigned r, const EpsilonSchedule& schedule,
                               Real previous_eps = std::numeric_limits<Real>::infinity());

std::vector<StageRecord> run_completion(std::span<const CauchySpec> seqs, unsigned max_r,
                                        const EpsilonSchedule& schedule);

}  // namespace subcone
