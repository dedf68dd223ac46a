#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdpcore/model.hpp"

namespace mdpcore {

/// Values substituted at frontier (unexplored) states: the lower run assumes
/// the best case, the upper run the worst. For reachability (0, 1); for mean
/// payoff the a-priori reward bounds (r_min, r_max).
struct FrontierPolicy {
    double lower = 0.0;
    double upper = 1.0;
};

/// Sub-model induced by a state set. All transitions leaving the set are
/// redirected into a single absorbing EXIT state appended at position
/// `states.size()`; parallel redirected entries are merged.
struct SubModel {
    ExplicitMdp mdp;
    std::vector<StateId> originals;  // position -> original state id
    StateId exit_state;              // position of EXIT within mdp

    /// Position of an original state, or nullopt if outside the set.
    std::optional<StateId> position_of(StateId original) const;
};

SubModel build_core_submodel(const SuccessorModel& model,
                             const std::vector<StateId>& sorted_states);

using StateMask = std::vector<std::uint8_t>;  // one flag per state

struct BoundedReachValues {
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Exact k-step dynamic program for max reachability. Target states are
/// pinned to 1, frontier states to the policy values; everything else starts
/// at 0. Returns per-state values at step k for both frontier substitutions
/// (identical when the frontier mask is empty).
BoundedReachValues bounded_max_reach(const ExplicitMdp& mdp, const StateMask& targets,
                                     std::uint64_t steps, const StateMask& frontier,
                                     FrontierPolicy policy);

struct StepCurve {
    std::vector<double> lower;  // index i holds the value at step i+1
    std::vector<double> upper;
};

/// Streaming variant of bounded_max_reach tracking one state across all
/// steps 1..k with two value vectors of memory.
StepCurve bounded_max_reach_curve(const ExplicitMdp& mdp, const StateMask& targets,
                                  std::uint64_t steps, const StateMask& frontier,
                                  FrontierPolicy policy, StateId track);

struct IntervalValues {
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Certified unbounded max reachability via interval iteration: value
/// iteration from below and above after collapsing end components, with
/// target-free bottom components pinned to 0. Iterates until the sup-norm
/// gap is at most `delta`; the true value lies within [lower, upper].
/// Throws ConvergenceError when the sweep cap is exceeded.
IntervalValues max_reach_interval(const ExplicitMdp& mdp, const StateMask& targets,
                                  double delta, const StateMask& frontier,
                                  FrontierPolicy policy,
                                  std::uint64_t sweep_cap = 10'000'000);

/// Maximal probability of ever leaving `core` (or of leaving it within
/// `horizon` steps), measured at the initial state. The bounded variant is an
/// exact DP; the unbounded variant is interval iteration with precision
/// `delta`. The initial state must belong to the core.
ValueInterval exit_probability(const SuccessorModel& model,
                               const std::vector<StateId>& sorted_core,
                               std::optional<std::uint64_t> horizon,
                               double delta = 1e-10);

/// Total-reward DP divided by the step count: bounds on the best achievable
/// j-step average reward for j = 1..k. Frontier states accrue r_min per step
/// in the lower run and r_max in the upper run.
StepCurve bounded_mean_payoff_curve(const ExplicitMdp& mdp,
                                    const std::vector<double>& rewards,
                                    std::uint64_t steps, const StateMask& frontier,
                                    double r_min, double r_max, StateId track);

}  // namespace mdpcore
