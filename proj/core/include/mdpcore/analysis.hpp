#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdpcore/learncore.hpp"
#include "mdpcore/model.hpp"
#include "mdpcore/numerics.hpp"

namespace mdpcore {

/// The stability function of a core: N -> maximal probability of exiting the
/// core within N steps. Non-decreasing in N; below epsilon for N up to the
/// core's horizon. How fast it grows beyond the horizon measures how well the
/// core captures long-run behaviour.
struct StabilityProfile {
    double epsilon = 0.0;
    std::optional<std::uint64_t> core_horizon;
    std::vector<double> exits;  // index i holds the exit probability within i+1 steps
};

StabilityProfile stability(const SuccessorModel& model, const CoreResult& core,
                           std::uint64_t n_max);

/// Certified per-step bounds obtained by computing only on the core:
/// unexplored states are pinned to the worst/best case. Guarantees exist for
/// steps up to the core horizon (gap below epsilon); beyond it the curve is
/// an empirical extrapolation.
struct ExtrapolationCurve {
    std::vector<double> lower;  // index i holds the bound at step i+1
    std::vector<double> upper;
};

/// N-step max reachability bounds: lower run pins states outside the core to
/// 0, upper run to 1; target states inside the core are pinned to 1 in both.
ExtrapolationCurve extrapolate_reach(const SuccessorModel& model, const CoreResult& core,
                                     const std::vector<StateId>& targets,
                                     std::uint64_t n_max);

/// Unbounded endpoint of the reachability extrapolation, via interval
/// iteration on the core sub-model with the same frontier policy.
ValueInterval extrapolate_reach_unbounded(const SuccessorModel& model,
                                          const CoreResult& core,
                                          const std::vector<StateId>& targets,
                                          double delta = 1e-10);

/// N-step average-reward bounds; unexplored states accrue r_min (lower run)
/// or r_max (upper run) per step. The model must carry rewards and
/// [r_min, r_max] must enclose the core states' rewards.
ExtrapolationCurve extrapolate_mean_payoff(const SuccessorModel& model,
                                           const CoreResult& core, double r_min,
                                           double r_max, std::uint64_t n_max);

}  // namespace mdpcore
