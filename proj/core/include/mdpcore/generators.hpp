#pragma once

#include <cstdint>
#include <vector>

#include "mdpcore/model.hpp"

namespace mdpcore {

// ---------------------------------------------------------------------------
// Airplane model: a flight with a rarely-entered recovery region whose size
// scales quadratically. With a return trip the model almost surely crashes,
// which makes the unbounded-core construction degenerate on purpose.
// ---------------------------------------------------------------------------

struct AirplaneConfig {
    std::uint64_t size = 100;  // recovery region is size x size states
    bool return_trip = false;
    double tau = 1e-10;  // probability of the hazardous bit flip per flight
};

/// Lazy successor-function implementation of the airplane family. State
/// indices are identical to the materialized ExplicitMdp from
/// build_airplane(), so cores learned on either representation agree.
///
/// Layout: 0 origin (initial), 1 starting, 2 landing, 3 destination,
/// 4 bit-flip, 5 crash, then size^2 recovery cells in row-major order,
/// then (with a return trip) `size` return-chain states.
class AirplaneModel final : public SuccessorModel {
public:
    explicit AirplaneModel(const AirplaneConfig& config);

    StateId num_states() const override;
    StateId initial_state() const override { return kOrigin; }
    std::vector<MdpAction> state_actions(StateId state) const override;

    static constexpr StateId kOrigin = 0;
    static constexpr StateId kStarting = 1;
    static constexpr StateId kLanding = 2;
    static constexpr StateId kDestination = 3;
    static constexpr StateId kBitFlip = 4;
    static constexpr StateId kCrash = 5;
    static constexpr StateId kRecoveryBase = 6;

    StateId recovery_cell(std::uint64_t row, std::uint64_t col) const;
    StateId return_state(std::uint64_t index) const;
    bool is_recovery(StateId state) const;

    const AirplaneConfig& config() const { return config_; }

private:
    AirplaneConfig config_;
};

/// Materializes the airplane model. Guarded against sizes whose explicit
/// representation would not fit in memory; use AirplaneModel directly there.
ExplicitMdp build_airplane(const AirplaneConfig& config);

// ---------------------------------------------------------------------------
// Knapsack reduction: deciding whether the resulting MDP has a small core is
// exactly deciding the 0/1-Knapsack instance.
// ---------------------------------------------------------------------------

struct KnapsackInstance {
    std::vector<std::uint64_t> values;
    std::vector<std::uint64_t> weights;
    std::uint64_t threshold_value = 0;  // packed value must exceed this
    std::uint64_t weight_limit = 0;     // packed weight must stay below this
};

struct KnapsackMdp {
    ExplicitMdp mdp;
    std::uint64_t core_size_budget;  // k = weight_limit + 1
    double item_scale;               // m = epsilon / (V - v)
    /// First chain state s_{i,1} per item, in the (possibly augmented)
    /// instance order. Chains are contiguous: s_{i,j} = chain_first[i] + j - 1.
    std::vector<StateId> chain_first;
    KnapsackInstance instance;  // after the value-threshold normalization
};

/// Builds the reduction MDP: initial state 0 branches with probability
/// m * v_i into chain i and with the remaining mass into the sink (state 1).
/// Requires 0 < epsilon <= 1/3; a padding object enforcing v <= V/2 is added
/// when needed.
KnapsackMdp build_knapsack_mdp(const KnapsackInstance& instance, double epsilon);

// ---------------------------------------------------------------------------
// Small fixed models.
// ---------------------------------------------------------------------------

/// Four states: the initial state branches (eps/2, 1-eps, eps/2) into three
/// absorbing sinks. Minimal cores are not unique on this model.
/// Requires 0 < epsilon < 1/2.
ExplicitMdp build_fig3(double epsilon);

/// Seven states: initial state with actions a (0.8 -> s1, 0.2 -> s2) and
/// b (0.3 -> s3, 0.7 -> chain of three states ending in s1); s1, s2, s3 are
/// absorbing. Max reachability of s1 is 0.8 regardless of the chain.
ExplicitMdp build_fig2();

// ---------------------------------------------------------------------------
// Random test corpus.
// ---------------------------------------------------------------------------

struct RandomModelConfig {
    std::uint64_t num_states = 10;
    std::uint32_t max_actions = 2;
    std::uint32_t max_branching = 3;
    double sink_fraction = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed seed. Every state is reachable from the initial
/// state and has at least one action; the requested fraction of states are
/// absorbing self-loop sinks (the initial state never is).
ExplicitMdp build_random(const RandomModelConfig& config);

/// Uniform rewards in [lo, hi), deterministic for a fixed seed.
std::vector<double> random_rewards(std::uint64_t num_states, std::uint64_t seed,
                                   double lo = 0.0, double hi = 1.0);

}  // namespace mdpcore
