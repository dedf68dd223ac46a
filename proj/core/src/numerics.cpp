#include "mdpcore/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "mdpcore/graph.hpp"

namespace mdpcore {

std::optional<StateId> SubModel::position_of(StateId original) const {
    auto it = std::lower_bound(originals.begin(), originals.end(), original);
    if (it != originals.end() && *it == original) {
        return static_cast<StateId>(it - originals.begin());
    }
    return std::nullopt;
}

SubModel build_core_submodel(const SuccessorModel& model,
                             const std::vector<StateId>& sorted_states) {
    if (sorted_states.empty()) {
        throw ModelError("cannot build a sub-model over an empty state set");
    }
    const StateId exit_pos = sorted_states.size();
    std::vector<std::vector<MdpAction>> actions(sorted_states.size() + 1);

    for (std::size_t pos = 0; pos < sorted_states.size(); ++pos) {
        auto original_actions = model.state_actions(sorted_states[pos]);
        actions[pos].reserve(original_actions.size());
        for (auto& action : original_actions) {
            std::vector<DistributionEntry> remapped;
            remapped.reserve(action.distribution.size());
            for (const auto& entry : action.distribution) {
                auto it = std::lower_bound(sorted_states.begin(), sorted_states.end(),
                                           entry.target);
                if (it != sorted_states.end() && *it == entry.target) {
                    remapped.push_back({static_cast<StateId>(it - sorted_states.begin()),
                                        entry.probability});
                } else {
                    remapped.push_back({exit_pos, entry.probability});
                }
            }
            actions[pos].push_back(
                {std::move(action.label), Distribution::merged(std::move(remapped))});
        }
    }
    actions[exit_pos] = {{std::nullopt, Distribution::dirac(exit_pos)}};

    std::optional<std::vector<double>> rewards;
    if (model.has_rewards()) {
        rewards.emplace();
        rewards->reserve(sorted_states.size() + 1);
        for (StateId original : sorted_states) {
            rewards->push_back(model.state_reward(original));
        }
        rewards->push_back(0.0);  // substituted by the frontier policy in reward DPs
    }

    // The sub-model is position-indexed; callers query values through
    // position_of, so its own initial-state field is immaterial.
    return SubModel{ExplicitMdp(0, std::move(actions), std::move(rewards)), sorted_states,
                    exit_pos};
}

namespace {

void check_masks(const ExplicitMdp& mdp, const StateMask& targets, const StateMask& frontier) {
    if (targets.size() != mdp.num_states() || frontier.size() != mdp.num_states()) {
        throw ModelError("state mask size does not match the model");
    }
}

}  // namespace

BoundedReachValues bounded_max_reach(const ExplicitMdp& mdp, const StateMask& targets,
                                     std::uint64_t steps, const StateMask& frontier,
                                     FrontierPolicy policy) {
    check_masks(mdp, targets, frontier);
    const StateId n = mdp.num_states();
    BoundedReachValues cur;
    cur.lower.assign(n, 0.0);
    cur.upper.assign(n, 0.0);
    for (StateId s = 0; s < n; ++s) {
        if (targets[s]) {
            cur.lower[s] = cur.upper[s] = 1.0;
        } else if (frontier[s]) {
            cur.lower[s] = policy.lower;
            cur.upper[s] = policy.upper;
        }
    }
    BoundedReachValues next = cur;
    for (std::uint64_t step = 0; step < steps; ++step) {
        for (StateId s = 0; s < n; ++s) {
            if (targets[s] || frontier[s]) {
                continue;  // pinned
            }
            double best_lo = 0.0;
            double best_up = 0.0;
            for (const auto& action : mdp.actions(s)) {
                double lo = 0.0;
                double up = 0.0;
                for (const auto& entry : action.distribution) {
                    lo += entry.probability * cur.lower[entry.target];
                    up += entry.probability * cur.upper[entry.target];
                }
                best_lo = std::max(best_lo, lo);
                best_up = std::max(best_up, up);
            }
            next.lower[s] = best_lo;
            next.upper[s] = best_up;
        }
        std::swap(cur, next);
    }
    return cur;
}

StepCurve bounded_max_reach_curve(const ExplicitMdp& mdp, const StateMask& targets,
                                  std::uint64_t steps, const StateMask& frontier,
                                  FrontierPolicy policy, StateId track) {
    check_masks(mdp, targets, frontier);
    const StateId n = mdp.num_states();
    std::vector<double> cur_lo(n, 0.0), cur_up(n, 0.0);
    for (StateId s = 0; s < n; ++s) {
        if (targets[s]) {
            cur_lo[s] = cur_up[s] = 1.0;
        } else if (frontier[s]) {
            cur_lo[s] = policy.lower;
            cur_up[s] = policy.upper;
        }
    }
    std::vector<double> next_lo = cur_lo, next_up = cur_up;
    StepCurve curve;
    curve.lower.reserve(steps);
    curve.upper.reserve(steps);
    for (std::uint64_t step = 0; step < steps; ++step) {
        for (StateId s = 0; s < n; ++s) {
            if (targets[s] || frontier[s]) {
                continue;
            }
            double best_lo = 0.0;
            double best_up = 0.0;
            for (const auto& action : mdp.actions(s)) {
                double lo = 0.0;
                double up = 0.0;
                for (const auto& entry : action.distribution) {
                    lo += entry.probability * cur_lo[entry.target];
                    up += entry.probability * cur_up[entry.target];
                }
                best_lo = std::max(best_lo, lo);
                best_up = std::max(best_up, up);
            }
            next_lo[s] = best_lo;
            next_up[s] = best_up;
        }
        cur_lo.swap(next_lo);
        cur_up.swap(next_up);
        curve.lower.push_back(cur_lo[track]);
        curve.upper.push_back(cur_up[track]);
    }
    return curve;
}

namespace {

// Interval iteration machinery: states pinned to constants (targets, frontier,
// target-free bottom MECs), everything else grouped by the MEC quotient.
struct IntervalProblem {
    static constexpr std::int32_t kPinned = -1;

    std::vector<std::int32_t> group_of;         // per state; kPinned or group id
    std::vector<double> pin_lower, pin_upper;   // per state, pinned only
    std::vector<std::vector<std::pair<StateId, std::uint32_t>>> group_actions;
    std::vector<std::uint32_t> sweep_order;     // group ids, successors first
};

IntervalProblem build_interval_problem(const ExplicitMdp& mdp, const StateMask& targets,
                                       const StateMask& frontier, FrontierPolicy policy) {
    const StateId n = mdp.num_states();
    IntervalProblem prob;
    prob.group_of.assign(n, IntervalProblem::kPinned);
    prob.pin_lower.assign(n, 0.0);
    prob.pin_upper.assign(n, 0.0);

    std::vector<StateId> candidates;
    for (StateId s = 0; s < n; ++s) {
        if (targets[s]) {
            prob.pin_lower[s] = prob.pin_upper[s] = 1.0;
        } else if (frontier[s]) {
            prob.pin_lower[s] = policy.lower;
            prob.pin_upper[s] = policy.upper;
        } else {
            candidates.push_back(s);
        }
    }

    // End components among the candidates collapse to one value each; pinned
    // states are absorbing, so their outgoing edges are irrelevant here.
    SubView view = SubView::from_subset(mdp, candidates);
    MecDecomposition mecs = mec_decompose(view);

    std::int32_t next_group = static_cast<std::int32_t>(mecs.mecs.size());
    std::vector<std::int32_t> group_of_pos(candidates.size());
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
        group_of_pos[pos] =
            mecs.state_to_mec[pos] >= 0 ? mecs.state_to_mec[pos] : next_group++;
        prob.group_of[candidates[pos]] = group_of_pos[pos];
    }
    prob.group_actions.resize(next_group);

    // Outgoing actions per group: everything that is not closed inside it.
    std::vector<std::vector<std::uint8_t>> retained(candidates.size());
    for (const auto& mec : mecs.mecs) {
        for (std::size_t i = 0; i < mec.states.size(); ++i) {
            auto& flags = retained[mec.states[i]];
            flags.assign(view.actions[mec.states[i]].size(), 0);
            for (std::uint32_t a : mec.retained_actions[i]) {
                flags[a] = 1;
            }
        }
    }
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
        const StateId s = candidates[pos];
        const std::size_t num_actions = mdp.actions(s).size();
        for (std::size_t a = 0; a < num_actions; ++a) {
            const bool internal = !retained[pos].empty() && retained[pos][a];
            if (!internal) {
                prob.group_actions[group_of_pos[pos]].push_back(
                    {s, static_cast<std::uint32_t>(a)});
            }
        }
    }

    // Sweep order: reverse topological over the group condensation.
    std::vector<std::vector<std::uint32_t>> group_adj(prob.group_actions.size());
    for (std::size_t g = 0; g < prob.group_actions.size(); ++g) {
        for (const auto& [s, a] : prob.group_actions[g]) {
            for (const auto& entry : mdp.actions(s)[a].distribution) {
                const std::int32_t tg = prob.group_of[entry.target];
                if (tg >= 0 && static_cast<std::size_t>(tg) != g) {
                    group_adj[g].push_back(static_cast<std::uint32_t>(tg));
                }
            }
        }
        std::sort(group_adj[g].begin(), group_adj[g].end());
        group_adj[g].erase(std::unique(group_adj[g].begin(), group_adj[g].end()),
                           group_adj[g].end());
    }
    SubView group_view;
    group_view.states.resize(prob.group_actions.size());
    group_view.actions.resize(prob.group_actions.size());
    for (std::size_t g = 0; g < prob.group_actions.size(); ++g) {
        group_view.states[g] = g;
        group_view.actions[g].push_back({std::move(group_adj[g]), false});
    }
    for (const auto& scc : scc_decompose(group_view)) {
        for (std::uint32_t g : scc) {
            prob.sweep_order.push_back(g);
        }
    }
    return prob;
}

}  // namespace

IntervalValues max_reach_interval(const ExplicitMdp& mdp, const StateMask& targets,
                                  double delta, const StateMask& frontier,
                                  FrontierPolicy policy, std::uint64_t sweep_cap) {
    check_masks(mdp, targets, frontier);
    if (!(delta > 0.0)) {
        throw ModelError("interval iteration requires a positive precision");
    }
    IntervalProblem prob = build_interval_problem(mdp, targets, frontier, policy);

    const std::size_t groups = prob.group_actions.size();
    std::vector<double> lower(groups, 0.0);
    std::vector<double> upper(groups, 1.0);
    std::vector<std::uint8_t> bottom(groups, 0);
    for (std::size_t g = 0; g < groups; ++g) {
        if (prob.group_actions[g].empty()) {
            bottom[g] = 1;  // target-free closed component: value 0
            upper[g] = 0.0;
        }
    }

    for (std::uint64_t sweep = 0; sweep < sweep_cap; ++sweep) {
        double gap = 0.0;
        for (std::uint32_t g : prob.sweep_order) {
            if (bottom[g]) {
                continue;
            }
            double best_lo = 0.0;
            double best_up = 0.0;
            for (const auto& [s, a] : prob.group_actions[g]) {
                double lo = 0.0;
                double up = 0.0;
                for (const auto& entry : mdp.actions(s)[a].distribution) {
                    const std::int32_t tg = prob.group_of[entry.target];
                    if (tg == IntervalProblem::kPinned) {
                        lo += entry.probability * prob.pin_lower[entry.target];
                        up += entry.probability * prob.pin_upper[entry.target];
                    } else {
                        lo += entry.probability * lower[tg];
                        up += entry.probability * upper[tg];
                    }
                }
                best_lo = std::max(best_lo, lo);
                best_up = std::max(best_up, up);
            }
            lower[g] = best_lo;
            upper[g] = best_up;
            gap = std::max(gap, best_up - best_lo);
        }
        if (gap <= delta) {
            IntervalValues result;
            result.lower.resize(mdp.num_states());
            result.upper.resize(mdp.num_states());
            for (StateId s = 0; s < mdp.num_states(); ++s) {
                const std::int32_t g = prob.group_of[s];
                if (g == IntervalProblem::kPinned) {
                    result.lower[s] = prob.pin_lower[s];
                    result.upper[s] = prob.pin_upper[s];
                } else {
                    result.lower[s] = lower[g];
                    result.upper[s] = upper[g];
                }
            }
            return result;
        }
    }
    throw ConvergenceError("interval iteration did not reach precision " +
                           std::to_string(delta) + " within " + std::to_string(sweep_cap) +
                           " sweeps");
}

ValueInterval exit_probability(const SuccessorModel& model,
                               const std::vector<StateId>& sorted_core,
                               std::optional<std::uint64_t> horizon, double delta) {
    SubModel sub = build_core_submodel(model, sorted_core);
    const auto initial_pos = sub.position_of(model.initial_state());
    if (!initial_pos) {
        throw ModelError("initial state lies outside the core");
    }
    const StateId n = sub.mdp.num_states();
    StateMask targets(n, 0);
    targets[sub.exit_state] = 1;
    StateMask frontier(n, 0);

    if (horizon) {
        auto values = bounded_max_reach(sub.mdp, targets, *horizon, frontier, FrontierPolicy{});
        return {values.lower[*initial_pos], values.upper[*initial_pos]};
    }
    auto values = max_reach_interval(sub.mdp, targets, delta, frontier, FrontierPolicy{});
    return {values.lower[*initial_pos], values.upper[*initial_pos]};
}

StepCurve bounded_mean_payoff_curve(const ExplicitMdp& mdp, const std::vector<double>& rewards,
                                    std::uint64_t steps, const StateMask& frontier,
                                    double r_min, double r_max, StateId track) {
    if (rewards.size() != mdp.num_states()) {
        throw ModelError("rewards array does not match the model");
    }
    if (frontier.size() != mdp.num_states()) {
        throw ModelError("state mask size does not match the model");
    }
    if (r_min > r_max) {
        throw ModelError("r_min exceeds r_max");
    }
    for (StateId s = 0; s < mdp.num_states(); ++s) {
        if (!frontier[s] && (rewards[s] < r_min || rewards[s] > r_max)) {
            throw ModelError("reward of state " + std::to_string(s) +
                             " lies outside [r_min, r_max]");
        }
    }

    const StateId n = mdp.num_states();
    std::vector<double> cur_lo(n, 0.0), cur_up(n, 0.0);
    std::vector<double> next_lo(n, 0.0), next_up(n, 0.0);
    StepCurve curve;
    curve.lower.reserve(steps);
    curve.upper.reserve(steps);
    for (std::uint64_t step = 1; step <= steps; ++step) {
        for (StateId s = 0; s < n; ++s) {
            if (frontier[s]) {
                // Unknown region: accrue the a-priori reward bounds per step.
                next_lo[s] = cur_lo[s] + r_min;
                next_up[s] = cur_up[s] + r_max;
                continue;
            }
            double best_lo = -std::numeric_limits<double>::infinity();
            double best_up = -std::numeric_limits<double>::infinity();
            for (const auto& action : mdp.actions(s)) {
                double lo = 0.0;
                double up = 0.0;
                for (const auto& entry : action.distribution) {
                    lo += entry.probability * cur_lo[entry.target];
                    up += entry.probability * cur_up[entry.target];
                }
                best_lo = std::max(best_lo, lo);
                best_up = std::max(best_up, up);
            }
            next_lo[s] = rewards[s] + best_lo;
            next_up[s] = rewards[s] + best_up;
        }
        cur_lo.swap(next_lo);
        cur_up.swap(next_up);
        curve.lower.push_back(cur_lo[track] / static_cast<double>(step));
        curve.upper.push_back(cur_up[track] / static_cast<double>(step));
    }
    return curve;
}

}  // namespace mdpcore
