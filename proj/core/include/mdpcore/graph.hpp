#pragma once

#include <cstdint>
#include <vector>

#include "mdpcore/model.hpp"

namespace mdpcore {

/// Sub-model over a subset of states, reduced to what the graph algorithms
/// need: per-action target positions within the view plus a flag for edges
/// that leave it. Leaving edges point at a virtual absorbing "unknown" state
/// and therefore never participate in SCCs or end components.
struct SubView {
    struct ViewAction {
        std::vector<std::uint32_t> targets;  // positions into `states`
        bool leaves_view = false;
    };

    std::vector<StateId> states;  // ascending original ids
    std::vector<std::vector<ViewAction>> actions;

    static SubView from_model(const ExplicitMdp& mdp);
    static SubView from_subset(const SuccessorModel& model,
                               const std::vector<StateId>& sorted_states);
};

/// SCCs of the view, in reverse topological order over the condensation
/// (every SCC precedes the SCCs that can reach it).
std::vector<std::vector<std::uint32_t>> scc_decompose(const SubView& view);

struct MecDecomposition {
    struct Mec {
        std::vector<std::uint32_t> states;  // positions, ascending
        /// Retained (closed) action indices per member, parallel to `states`.
        std::vector<std::vector<std::uint32_t>> retained_actions;
    };

    std::vector<Mec> mecs;
    std::vector<std::int32_t> state_to_mec;  // position -> mec index, -1 if none
};

/// Maximal end components of the view. Standard iterative pruning: decompose
/// into SCCs, drop actions whose support leaves their SCC, drop states that
/// lose all actions, repeat until stable.
MecDecomposition mec_decompose(const SubView& view);

/// Snapshot of the EC-collapsing quotient maintained by a partial
/// exploration: idempotent representative map plus, per representative, the
/// actions that leave the collapsed component (internal actions omitted).
struct QuotientView {
    std::vector<std::pair<StateId, StateId>> representative;  // (state, root)
    std::vector<std::pair<StateId, std::vector<std::pair<StateId, std::uint32_t>>>>
        outgoing;  // (root, [(member state, action index)])
};

}  // namespace mdpcore
