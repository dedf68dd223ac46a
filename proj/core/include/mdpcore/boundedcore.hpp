#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mdpcore/learncore.hpp"
#include "mdpcore/types.hpp"

namespace mdpcore {

/// Step-indexed upper-bound store for the finite-horizon learner: get(s, r)
/// bounds the maximal probability of reaching an unexplored state from s
/// within r steps.
///
/// The store keeps one slot per K steps (dense storage is the K = 1 case).
/// An update at remaining-steps r tightens the largest stored index <= r by
/// min, then clamps the slots below it so stored values stay non-decreasing
/// in the step index; reads return the smallest stored index >= r. This keeps
/// every read a sound over-approximation: a value learned for r steps is only
/// ever served for queries about at most r steps.
///
/// Contract: get(s, 0) = 0 for every state; reads are monotone in r;
/// untouched and unexplored states read 1 for r >= 1; a sparse store
/// dominates a dense one pointwise under identical update sequences.
class BoundFunction {
public:
    BoundFunction(BoundStoreKind kind, std::uint64_t horizon, std::uint32_t k = 5);

    BoundStoreKind kind() const { return kind_; }
    std::uint64_t horizon() const { return horizon_; }
    std::uint32_t step_granularity() const { return k_; }
    /// Largest stored step index, ceil(horizon / K) * K.
    std::uint64_t top_index() const { return top_; }

    double get(StateId state, std::uint64_t remaining) const;

    /// Records that `p` bounds the exit probability within `remaining` steps.
    /// remaining must be >= 1; p is clamped into [0, 1]. Updates with p = 1
    /// and updates whose information cannot be represented (remaining < K)
    /// are no-ops.
    void update(StateId state, std::uint64_t remaining, double p);

    std::size_t touched_states() const { return slots_.size(); }

private:
    BoundStoreKind kind_;
    std::uint64_t horizon_;
    std::uint32_t k_;
    std::uint64_t top_;
    std::size_t slots_per_state_;
    std::unordered_map<StateId, std::vector<double>> slots_;
};

struct BoundedLearnConfig {
    LearnConfig base;
    std::uint64_t horizon = 100;
    BoundStoreKind store = BoundStoreKind::sparse;
    std::uint32_t store_k = 5;

    /// Every this many episodes, run an exact horizon-bounded DP on the
    /// explored sub-model (frontier pinned to 1) and write the results into
    /// the store. Restores guaranteed convergence for both store kinds.
    std::uint64_t exact_sweep_every = 64;
};

/// Learns an n-step epsilon-core: sample length-n paths, back-propagate
/// step-indexed bounds through the store, interleave exact sweeps, until
/// get(initial, n) < epsilon; the result is re-verified by the exact n-step
/// oracle. Deterministic for fixed (model, config).
CoreResult learn_finite_core(const SuccessorModel& model, const BoundedLearnConfig& config,
                             const WarmStart* warm = nullptr);

}  // namespace mdpcore
