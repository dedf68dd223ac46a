#include "mdpcore/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace mdpcore {

namespace {

SubView::ViewAction make_view_action(const Distribution& dist,
                                     const std::vector<StateId>& sorted_states) {
    SubView::ViewAction view;
    view.targets.reserve(dist.size());
    for (const auto& entry : dist) {
        auto it = std::lower_bound(sorted_states.begin(), sorted_states.end(), entry.target);
        if (it != sorted_states.end() && *it == entry.target) {
            view.targets.push_back(static_cast<std::uint32_t>(it - sorted_states.begin()));
        } else {
            view.leaves_view = true;
        }
    }
    return view;
}

}  // namespace

SubView SubView::from_model(const ExplicitMdp& mdp) {
    SubView view;
    view.states.resize(mdp.num_states());
    for (StateId s = 0; s < mdp.num_states(); ++s) {
        view.states[s] = s;
    }
    view.actions.resize(mdp.num_states());
    for (StateId s = 0; s < mdp.num_states(); ++s) {
        const auto& acts = mdp.actions(s);
        view.actions[s].reserve(acts.size());
        for (const auto& action : acts) {
            SubView::ViewAction va;
            va.targets.reserve(action.distribution.size());
            for (const auto& entry : action.distribution) {
                va.targets.push_back(static_cast<std::uint32_t>(entry.target));
            }
            view.actions[s].push_back(std::move(va));
        }
    }
    return view;
}

SubView SubView::from_subset(const SuccessorModel& model,
                             const std::vector<StateId>& sorted_states) {
    SubView view;
    view.states = sorted_states;
    view.actions.resize(sorted_states.size());
    for (std::size_t pos = 0; pos < sorted_states.size(); ++pos) {
        const auto acts = model.state_actions(sorted_states[pos]);
        view.actions[pos].reserve(acts.size());
        for (const auto& action : acts) {
            view.actions[pos].push_back(make_view_action(action.distribution, sorted_states));
        }
    }
    return view;
}

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

/// Iterative Tarjan over an adjacency callback. SCCs come out in reverse
/// topological order (an SCC is emitted only after everything it reaches).
template <typename Successors>
std::vector<std::vector<std::uint32_t>> tarjan(std::uint32_t n, Successors successors) {
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> sccs;
    std::uint32_t next_index = 0;

    struct Frame {
        std::uint32_t node;
        std::uint32_t edge;
    };
    std::vector<Frame> frames;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& frame = frames.back();
            const std::uint32_t v = frame.node;
            if (frame.edge == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            const auto& succ = successors(v);
            while (frame.edge < succ.size()) {
                const std::uint32_t w = succ[frame.edge++];
                if (index[w] == kUnvisited) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            }
            if (descended) {
                continue;
            }
            if (lowlink[v] == index[v]) {
                std::vector<std::uint32_t> scc;
                while (true) {
                    const std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    scc.push_back(w);
                    if (w == v) {
                        break;
                    }
                }
                std::sort(scc.begin(), scc.end());
                sccs.push_back(std::move(scc));
            }
            frames.pop_back();
            if (!frames.empty()) {
                Frame& parent = frames.back();
                lowlink[parent.node] = std::min(lowlink[parent.node], lowlink[v]);
            }
        }
    }
    return sccs;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> scc_decompose(const SubView& view) {
    const std::uint32_t n = static_cast<std::uint32_t>(view.states.size());
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        for (const auto& action : view.actions[s]) {
            adjacency[s].insert(adjacency[s].end(), action.targets.begin(), action.targets.end());
        }
    }
    return tarjan(n, [&](std::uint32_t v) -> const std::vector<std::uint32_t>& {
        return adjacency[v];
    });
}

MecDecomposition mec_decompose(const SubView& view) {
    const std::uint32_t n = static_cast<std::uint32_t>(view.states.size());
    std::vector<std::uint8_t> candidate(n, 1);
    std::vector<std::vector<std::uint8_t>> alive(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        alive[s].assign(view.actions[s].size(), 1);
        // Actions whose support leaves the view can never be closed.
        for (std::size_t a = 0; a < view.actions[s].size(); ++a) {
            if (view.actions[s][a].leaves_view) {
                alive[s][a] = 0;
            }
        }
    }

    std::vector<std::int32_t> scc_of(n, -1);
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t s = 0; s < n; ++s) {
            adjacency[s].clear();
            if (!candidate[s]) {
                continue;
            }
            for (std::size_t a = 0; a < view.actions[s].size(); ++a) {
                if (!alive[s][a]) {
                    continue;
                }
                for (std::uint32_t t : view.actions[s][a].targets) {
                    if (!candidate[t]) {
                        alive[s][a] = 0;
                        changed = true;
                        break;
                    }
                }
                if (alive[s][a]) {
                    for (std::uint32_t t : view.actions[s][a].targets) {
                        adjacency[s].push_back(t);
                    }
                }
            }
        }

        std::vector<std::uint32_t> nodes;
        for (std::uint32_t s = 0; s < n; ++s) {
            if (candidate[s]) {
                nodes.push_back(s);
            }
        }
        // Tarjan over the candidate sub-graph (ids stay global positions).
        std::fill(scc_of.begin(), scc_of.end(), -1);
        {
            std::int32_t scc_id = 0;
            auto sccs = tarjan(n, [&](std::uint32_t v) -> const std::vector<std::uint32_t>& {
                return adjacency[v];
            });
            for (const auto& scc : sccs) {
                bool relevant = false;
                for (std::uint32_t v : scc) {
                    if (candidate[v]) {
                        relevant = true;
                        break;
                    }
                }
                if (!relevant) {
                    continue;
                }
                for (std::uint32_t v : scc) {
                    scc_of[v] = scc_id;
                }
                ++scc_id;
            }
        }

        for (std::uint32_t s = 0; s < n; ++s) {
            if (!candidate[s]) {
                continue;
            }
            bool any_alive = false;
            for (std::size_t a = 0; a < view.actions[s].size(); ++a) {
                if (!alive[s][a]) {
                    continue;
                }
                bool closed = true;
                for (std::uint32_t t : view.actions[s][a].targets) {
                    if (scc_of[t] != scc_of[s]) {
                        closed = false;
                        break;
                    }
                }
                if (!closed) {
                    alive[s][a] = 0;
                    changed = true;
                } else {
                    any_alive = true;
                }
            }
            if (!any_alive) {
                candidate[s] = 0;
                changed = true;
            }
        }
    }

    MecDecomposition result;
    result.state_to_mec.assign(n, -1);
    std::vector<std::int32_t> mec_of_scc;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!candidate[s]) {
            continue;
        }
        const std::int32_t scc = scc_of[s];
        if (static_cast<std::size_t>(scc) >= mec_of_scc.size()) {
            mec_of_scc.resize(scc + 1, -1);
        }
        if (mec_of_scc[scc] == -1) {
            mec_of_scc[scc] = static_cast<std::int32_t>(result.mecs.size());
            result.mecs.emplace_back();
        }
        const std::int32_t mec_index = mec_of_scc[scc];
        auto& mec = result.mecs[mec_index];
        mec.states.push_back(s);
        std::vector<std::uint32_t> retained;
        for (std::size_t a = 0; a < view.actions[s].size(); ++a) {
            if (alive[s][a]) {
                retained.push_back(static_cast<std::uint32_t>(a));
            }
        }
        mec.retained_actions.push_back(std::move(retained));
        result.state_to_mec[s] = mec_index;
    }
    return result;
}

}  // namespace mdpcore
