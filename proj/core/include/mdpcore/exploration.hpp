#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdpcore/graph.hpp"
#include "mdpcore/model.hpp"

namespace mdpcore {

/// Path sampling heuristics. Action-based kinds first pick an action
/// maximizing the expected upper bound, then a successor with probability
/// proportional to the scoring function; graph-based kinds ignore actions
/// and score successors directly.
enum class Heuristic { prob, weighted, difference, graph_weighted, graph_difference };

const char* heuristic_name(Heuristic h);
std::optional<Heuristic> heuristic_from_name(const std::string& name);

struct EpisodeConfig {
    std::uint64_t cap_min = 100;
    double cap_factor = 3.0;       // episode length cap = max(cap_min, factor * |explored|)
    std::uint32_t revisit_threshold = 8;  // revisits beyond this flag an undetected EC
};

struct ExplorationStats {
    std::uint64_t paths_sampled = 0;
    std::uint64_t states_explored = 0;
    std::uint64_t bellman_updates = 0;
    std::uint64_t ec_collapses = 0;
    double wall_seconds = 0.0;
};

/// Mutable state of a partial exploration: the explored set, its frontier
/// (known but unexplored successors, implicit upper bound 1), per-state upper
/// bounds U on the probability of ever reaching an unexplored state, and the
/// EC-collapsing quotient that removes spurious fixed points of U.
///
/// Bounds live on quotient roots; members report their root's bound. U is
/// non-increasing over time and stays a sound upper bound throughout.
class PartialExploration {
public:
    PartialExploration(const SuccessorModel& model, std::uint64_t seed);

    /// Marks the given states explored with the given bounds (default 1).
    /// Bound consistency is the caller's contract.
    void warm_start(const std::vector<StateId>& states,
                    const std::unordered_map<StateId, double>* bounds);

    const SuccessorModel& model() const { return model_; }
    std::mt19937_64& rng() { return rng_; }
    ExplorationStats& stats() { return stats_; }
    const ExplorationStats& stats() const { return stats_; }

    bool is_explored(StateId state) const;
    bool is_frontier(StateId state) const;
    std::size_t explored_count() const { return explored_.size(); }

    /// U(state): 1 for frontier states, the root bound for explored ones.
    double upper_bound(StateId state) const;

    const std::vector<MdpAction>& explored_actions(StateId state) const;

    std::vector<StateId> explored_states() const;  // ascending
    std::vector<StateId> frontier_states() const;  // ascending

    /// Promotes a frontier (or brand-new) state to explored: materializes its
    /// actions, seeds U = 1, and assigns U = 0 right away if the state is a
    /// trivial sink (all actions self-loop).
    void explore(StateId state);

    struct Episode {
        std::vector<StateId> path;
        bool revisit_trigger = false;  // some state was revisited beyond the threshold
    };

    /// Samples one episode from the initial state. Ends on visiting a
    /// frontier state (which becomes explored), on reaching a U = 0 state, or
    /// at the length cap. When every successor scores zero the choice falls
    /// back to uniform.
    Episode sample_path(Heuristic heuristic, const EpisodeConfig& config);

    /// Back-propagates U along the path in reverse via Bellman updates.
    void backpropagate(const std::vector<StateId>& path);

    /// One Bellman update on the state's root:
    /// U <- min(U, max over live actions of sum Delta * U(successor)).
    double bellman_update(StateId state);

    /// Recomputes the MEC decomposition of the explored sub-model and
    /// collapses each MEC to one representative. The representative's bound is
    /// the minimum over members (sound: EC members share their exit value);
    /// MECs without outgoing actions get U = 0.
    void update_ecs();

    /// Explored states in an order where successors come first; full Bellman
    /// sweeps converge fastest in this order.
    std::vector<StateId> sweep_order() const;

    /// One Bellman update per explored state, in the given order. Returns the
    /// largest single-state decrease.
    double sweep(const std::vector<StateId>& order);

    QuotientView quotient_view() const;

private:
    struct Entry {
        std::vector<MdpAction> actions;
        StateId parent;  // union-find; parent == self for roots
        // Root-only fields.
        double upper = 1.0;
        std::vector<std::pair<StateId, std::uint32_t>> live_actions;
        bool pinned_zero = false;
    };

    StateId find_root(StateId state) const;
    Entry& root_entry(StateId state);
    const Entry& root_entry(StateId state) const;
    double action_value(const MdpAction& action) const;
    StateId pick_successor(StateId state, Heuristic heuristic);

    const SuccessorModel& model_;
    std::mt19937_64 rng_;
    mutable std::unordered_map<StateId, Entry> explored_;
    std::unordered_map<StateId, char> frontier_;
    ExplorationStats stats_;
};

}  // namespace mdpcore
