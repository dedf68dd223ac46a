#include "mdpcore/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "mdpcore/rng.hpp"

namespace mdpcore {

namespace {

// Explicit construction of the airplane family beyond this size would not fit
// in memory; the lazy AirplaneModel has no such limit.
constexpr std::uint64_t kMaxExplicitAirplaneSize = 1000;

void validate_airplane(const AirplaneConfig& config) {
    if (config.size < 1) {
        throw ModelError("airplane size must be at least 1");
    }
    if (!(config.tau > 0.0 && config.tau < 1.0)) {
        throw ModelError("airplane tau must lie strictly between 0 and 1");
    }
}

}  // namespace

AirplaneModel::AirplaneModel(const AirplaneConfig& config) : config_(config) {
    validate_airplane(config_);
}

StateId AirplaneModel::num_states() const {
    const std::uint64_t s = config_.size;
    return kRecoveryBase + s * s + (config_.return_trip ? s : 0);
}

StateId AirplaneModel::recovery_cell(std::uint64_t row, std::uint64_t col) const {
    return kRecoveryBase + row * config_.size + col;
}

StateId AirplaneModel::return_state(std::uint64_t index) const {
    return kRecoveryBase + config_.size * config_.size + index;
}

bool AirplaneModel::is_recovery(StateId state) const {
    return state >= kRecoveryBase && state < kRecoveryBase + config_.size * config_.size;
}

std::vector<MdpAction> AirplaneModel::state_actions(StateId state) const {
    const std::uint64_t s = config_.size;
    const double tau = config_.tau;
    switch (state) {
        case kOrigin:
            return {{"start", Distribution::dirac(kStarting)}};
        case kStarting:
            return {{"fly", Distribution::create({{kLanding, 1.0 - tau}, {kBitFlip, tau}})},
                    {"crash plane", Distribution::dirac(kCrash)}};
        case kLanding:
            return {{"land", Distribution::dirac(kDestination)},
                    {"crash plane", Distribution::dirac(kCrash)}};
        case kDestination:
            if (config_.return_trip) {
                return {{"return", Distribution::dirac(return_state(0))}};
            }
            return {{std::nullopt, Distribution::dirac(kDestination)}};
        case kBitFlip:
            return {{"recover", Distribution::dirac(recovery_cell(0, 0))}};
        case kCrash:
            return {{std::nullopt, Distribution::dirac(kCrash)}};
        default:
            break;
    }
    if (is_recovery(state)) {
        const std::uint64_t cell = state - kRecoveryBase;
        const std::uint64_t row = cell / s;
        const std::uint64_t col = cell % s;
        if (row == s - 1 && col == s - 1) {
            return {{std::nullopt, Distribution::create({{kLanding, 0.5}, {kCrash, 0.5}})}};
        }
        const std::uint64_t next_row = std::min(row + 1, s - 1);
        const std::uint64_t next_col = std::min(col + 1, s - 1);
        // Clamped duplicates merge; every action advances with probability
        // at least one half, so the region has no end components.
        return {{std::nullopt, Distribution::merged({{recovery_cell(next_row, col), 0.5},
                                                     {recovery_cell(next_row, next_col), 0.5}})},
                {std::nullopt, Distribution::merged({{recovery_cell(row, next_col), 0.5},
                                                     {recovery_cell(next_row, next_col), 0.5}})}};
    }
    const std::uint64_t ret = state - (kRecoveryBase + s * s);
    if (ret + 1 < s) {
        return {{std::nullopt, Distribution::dirac(return_state(ret + 1))}};
    }
    return {{std::nullopt, Distribution::dirac(kOrigin)}};
}

ExplicitMdp build_airplane(const AirplaneConfig& config) {
    validate_airplane(config);
    if (config.size > kMaxExplicitAirplaneSize) {
        throw ModelError("airplane size " + std::to_string(config.size) +
                         " is too large for explicit construction (limit " +
                         std::to_string(kMaxExplicitAirplaneSize) +
                         "); use the lazy AirplaneModel");
    }
    AirplaneModel lazy(config);
    const StateId n = lazy.num_states();
    std::vector<std::vector<MdpAction>> actions;
    actions.reserve(n);
    for (StateId state = 0; state < n; ++state) {
        actions.push_back(lazy.state_actions(state));
    }
    return ExplicitMdp(lazy.initial_state(), std::move(actions));
}

KnapsackMdp build_knapsack_mdp(const KnapsackInstance& instance, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0 / 3.0)) {
        throw ModelError("epsilon must lie in (0, 1/3] for the knapsack reduction");
    }
    if (instance.values.empty() || instance.values.size() != instance.weights.size()) {
        throw ModelError("knapsack instance needs equally many values and weights, at least one");
    }
    for (std::size_t i = 0; i < instance.values.size(); ++i) {
        if (instance.values[i] < 1 || instance.weights[i] < 1) {
            throw ModelError("knapsack values and weights must be at least 1");
        }
    }

    KnapsackInstance work = instance;
    std::uint64_t total_value = std::accumulate(work.values.begin(), work.values.end(),
                                                std::uint64_t{0});
    // The reduction assumes v <= V/2; a padding object with value 2v and
    // weight w restores it without changing satisfiability.
    if (2 * work.threshold_value > total_value) {
        work.values.push_back(2 * work.threshold_value);
        work.weights.push_back(std::max<std::uint64_t>(work.weight_limit, 1));
        total_value += 2 * work.threshold_value;
    }

    const double m = epsilon / static_cast<double>(total_value - work.threshold_value);
    const double branch_mass = m * static_cast<double>(total_value);
    if (branch_mass > 1.0) {
        throw ModelError("infeasible branch probabilities: m * V = " +
                         std::to_string(branch_mass));
    }

    const std::size_t items = work.values.size();
    std::vector<StateId> chain_first(items);
    StateId next = 2;
    for (std::size_t i = 0; i < items; ++i) {
        chain_first[i] = next;
        next += work.weights[i];
    }
    const StateId n = next;

    std::vector<std::vector<MdpAction>> actions(n);
    std::vector<DistributionEntry> branch;
    branch.reserve(items + 1);
    for (std::size_t i = 0; i < items; ++i) {
        branch.push_back({chain_first[i], m * static_cast<double>(work.values[i])});
    }
    branch.push_back({StateId{1}, 1.0 - branch_mass});
    actions[0] = {{std::nullopt, Distribution::create(std::move(branch))}};
    actions[1] = {{std::nullopt, Distribution::dirac(1)}};
    for (std::size_t i = 0; i < items; ++i) {
        for (std::uint64_t j = 0; j < work.weights[i]; ++j) {
            const StateId state = chain_first[i] + j;
            const StateId successor = (j + 1 < work.weights[i]) ? state + 1 : state;
            actions[state] = {{std::nullopt, Distribution::dirac(successor)}};
        }
    }

    return KnapsackMdp{ExplicitMdp(0, std::move(actions)), work.weight_limit + 1, m,
                       std::move(chain_first), std::move(work)};
}

ExplicitMdp build_fig3(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw ModelError("epsilon must lie strictly between 0 and 1/2");
    }
    std::vector<std::vector<MdpAction>> actions(4);
    actions[0] = {{std::nullopt, Distribution::create({{1, epsilon / 2.0},
                                                       {2, 1.0 - epsilon},
                                                       {3, epsilon / 2.0}})}};
    for (StateId s = 1; s < 4; ++s) {
        actions[s] = {{std::nullopt, Distribution::dirac(s)}};
    }
    return ExplicitMdp(0, std::move(actions));
}

ExplicitMdp build_fig2() {
    std::vector<std::vector<MdpAction>> actions(7);
    actions[0] = {{"a", Distribution::create({{1, 0.8}, {2, 0.2}})},
                  {"b", Distribution::create({{3, 0.3}, {4, 0.7}})}};
    for (StateId s = 1; s < 4; ++s) {
        actions[s] = {{std::nullopt, Distribution::dirac(s)}};
    }
    // The opaque region behind action b: a three-state chain ending in s1.
    actions[4] = {{std::nullopt, Distribution::dirac(5)}};
    actions[5] = {{std::nullopt, Distribution::dirac(6)}};
    actions[6] = {{std::nullopt, Distribution::dirac(1)}};
    return ExplicitMdp(0, std::move(actions));
}

ExplicitMdp build_random(const RandomModelConfig& config) {
    if (config.num_states < 1) {
        throw ModelError("random model needs at least one state");
    }
    if (config.max_actions < 1 || config.max_branching < 1) {
        throw ModelError("random model needs at least one action and one branch");
    }
    if (config.sink_fraction < 0.0 || config.sink_fraction > 1.0) {
        throw ModelError("sink fraction must lie in [0, 1]");
    }

    const StateId n = config.num_states;
    std::mt19937_64 rng(config.seed);

    // Sinks are drawn from the non-initial states.
    std::vector<StateId> shuffled;
    shuffled.reserve(n > 0 ? n - 1 : 0);
    for (StateId s = 1; s < n; ++s) {
        shuffled.push_back(s);
    }
    for (std::size_t i = shuffled.size(); i > 1; --i) {
        std::swap(shuffled[i - 1], shuffled[uniform_index(rng, i)]);
    }
    const std::size_t num_sinks = std::min<std::size_t>(
        shuffled.size(), static_cast<std::size_t>(config.sink_fraction * static_cast<double>(n)));
    std::vector<std::uint8_t> is_sink(n, 0);
    for (std::size_t i = 0; i < num_sinks; ++i) {
        is_sink[shuffled[i]] = 1;
    }

    // A random non-sink parent below each state guarantees reachability.
    std::vector<std::vector<StateId>> children(n);
    std::vector<StateId> nonsink_prefix{0};
    for (StateId s = 1; s < n; ++s) {
        const StateId parent = nonsink_prefix[uniform_index(rng, nonsink_prefix.size())];
        children[parent].push_back(s);
        if (!is_sink[s]) {
            nonsink_prefix.push_back(s);
        }
    }

    std::vector<std::vector<MdpAction>> actions(n);
    for (StateId s = 0; s < n; ++s) {
        if (is_sink[s]) {
            actions[s] = {{std::nullopt, Distribution::dirac(s)}};
            continue;
        }
        const std::size_t num_actions = 1 + uniform_index(rng, config.max_actions);
        std::vector<std::vector<DistributionEntry>> raw(num_actions);
        for (std::size_t a = 0; a < num_actions; ++a) {
            const std::size_t branches =
                std::min<std::size_t>(n, 1 + uniform_index(rng, config.max_branching));
            std::unordered_set<StateId> chosen;
            while (chosen.size() < branches) {
                chosen.insert(uniform_index(rng, n));
            }
            std::vector<StateId> targets(chosen.begin(), chosen.end());
            std::sort(targets.begin(), targets.end());
            for (StateId t : targets) {
                raw[a].push_back({t, 0.01 + uniform_unit(rng)});
            }
        }
        for (StateId child : children[s]) {
            raw[uniform_index(rng, num_actions)].push_back({child, 0.01 + uniform_unit(rng)});
        }
        for (auto& entries : raw) {
            double total = 0.0;
            for (const auto& e : entries) {
                total += e.probability;
            }
            for (auto& e : entries) {
                e.probability /= total;
            }
            actions[s].push_back({std::nullopt, Distribution::merged(std::move(entries))});
        }
    }

    return ExplicitMdp(0, std::move(actions));
}

std::vector<double> random_rewards(std::uint64_t num_states, std::uint64_t seed, double lo,
                                   double hi) {
    std::mt19937_64 rng(seed);
    std::vector<double> rewards(num_states);
    for (auto& r : rewards) {
        r = lo + (hi - lo) * uniform_unit(rng);
    }
    return rewards;
}

}  // namespace mdpcore
