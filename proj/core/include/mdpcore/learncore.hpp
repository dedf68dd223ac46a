#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mdpcore/exploration.hpp"
#include "mdpcore/model.hpp"
#include "mdpcore/types.hpp"

namespace mdpcore {

struct LearnConfig {
    double epsilon = 1e-6;
    Heuristic heuristic = Heuristic::weighted;
    std::uint64_t seed = 0;

    EpisodeConfig episode;

    /// Run the EC decomposition when the explored set grew by this factor
    /// since the last run (or when an episode trips the revisit threshold).
    double ec_growth = 1.5;

    /// Fairness fallback: after this many episodes without U(initial)
    /// dropping by more than stall_delta, switch to systematic breadth-first
    /// frontier expansion plus full Bellman sweeps.
    std::uint64_t stall_episodes = 10'000;
    double stall_delta = 1e-12;
    std::uint64_t fallback_sweeps_per_round = 64;

    std::optional<double> time_limit_seconds;
    std::optional<std::uint64_t> max_episodes;
};

struct WarmStart {
    std::vector<StateId> states;  // must contain the initial state
    std::unordered_map<StateId, double> upper_bounds;  // missing entries default to 1
};

/// A learned core. `states` is ascending and contains the initial state.
/// Unverified results (resource cap hit, or the oracle interval straddling
/// epsilon) are flagged explicitly and never silently returned as cores.
struct CoreResult {
    std::vector<StateId> states;
    double epsilon = 0.0;
    std::optional<std::uint64_t> horizon;  // nullopt = unbounded
    Heuristic heuristic = Heuristic::weighted;
    std::uint64_t seed = 0;

    bool verified = false;
    bool inconclusive = false;
    double verified_exit_upper = 1.0;  // meaningful when verified

    std::optional<BoundStoreKind> store_kind;  // bounded cores only
    std::uint32_t store_k = 0;

    ExplorationStats stats;
};

struct VerifyOutcome {
    bool verified = false;
    bool inconclusive = false;  // oracle interval straddles epsilon
    ValueInterval exit;
};

/// Oracle re-verification of a candidate core: accepts iff the certified
/// upper bound on the exit probability is strictly below epsilon.
VerifyOutcome verify_and_finalize(const SuccessorModel& model,
                                  const std::vector<StateId>& sorted_states,
                                  double epsilon,
                                  std::optional<std::uint64_t> horizon = std::nullopt);

/// Learns an unbounded epsilon-core: sample a path, expand the explored set,
/// collapse end components on schedule, back-propagate upper bounds along the
/// path, until U(initial) < epsilon; the result is re-verified against the
/// exact oracle. Deterministic for fixed (model, config).
CoreResult learn_core(const SuccessorModel& model, const LearnConfig& config,
                      const WarmStart* warm = nullptr);

}  // namespace mdpcore
