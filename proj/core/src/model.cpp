#include "mdpcore/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "mdpcore/core_io.hpp"

namespace mdpcore {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kSumErrorTolerance = 1e-9;
constexpr double kRenormTolerance = 1e-12;

std::string format_probability(double value) { return format_double(value); }

}  // namespace

Distribution Distribution::create(std::vector<DistributionEntry> entries) {
    if (entries.empty()) {
        throw ModelError("distribution is empty");
    }
    std::sort(entries.begin(), entries.end(),
              [](const DistributionEntry& a, const DistributionEntry& b) {
                  return a.target < b.target;
              });
    double sum = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].probability > 0.0)) {
            throw ModelError("probability " + format_probability(entries[i].probability) +
                             " for target " + std::to_string(entries[i].target) +
                             " is not strictly positive");
        }
        if (entries[i].probability > 1.0 + kSumErrorTolerance) {
            throw ModelError("probability " + format_probability(entries[i].probability) +
                             " for target " + std::to_string(entries[i].target) +
                             " exceeds one");
        }
        if (i > 0 && entries[i].target == entries[i - 1].target) {
            throw ModelError("duplicate target " + std::to_string(entries[i].target));
        }
        sum += entries[i].probability;
    }
    if (std::abs(sum - 1.0) > kSumErrorTolerance) {
        throw ModelError("distribution sums to " + format_probability(sum));
    }
    if (std::abs(sum - 1.0) > kRenormTolerance) {
        for (auto& entry : entries) {
            entry.probability /= sum;
        }
    }
    Distribution dist;
    dist.entries_ = std::move(entries);
    return dist;
}

Distribution Distribution::merged(std::vector<DistributionEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const DistributionEntry& a, const DistributionEntry& b) {
                  return a.target < b.target;
              });
    std::vector<DistributionEntry> merged;
    merged.reserve(entries.size());
    for (const auto& entry : entries) {
        if (entry.probability == 0.0) {
            continue;
        }
        if (!merged.empty() && merged.back().target == entry.target) {
            merged.back().probability += entry.probability;
        } else {
            merged.push_back(entry);
        }
    }
    return create(std::move(merged));
}

double Distribution::probability_of(StateId target) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), target,
                               [](const DistributionEntry& e, StateId t) { return e.target < t; });
    if (it != entries_.end() && it->target == target) {
        return it->probability;
    }
    return 0.0;
}

ExplicitMdp::ExplicitMdp(StateId initial, std::vector<std::vector<MdpAction>> actions,
                         std::optional<std::vector<double>> rewards)
    : initial_(initial), actions_(std::move(actions)), rewards_(std::move(rewards)) {
    if (actions_.empty()) {
        throw ModelError("model has no states");
    }
    if (initial_ >= actions_.size()) {
        throw ModelError("initial state " + std::to_string(initial_) + " out of range");
    }
    const StateId n = actions_.size();
    for (StateId s = 0; s < n; ++s) {
        if (actions_[s].empty()) {
            throw ModelError("state " + std::to_string(s) + ": empty action set");
        }
        for (std::size_t a = 0; a < actions_[s].size(); ++a) {
            for (const auto& entry : actions_[s][a].distribution) {
                if (entry.target >= n) {
                    throw ModelError("state " + std::to_string(s) + " action " +
                                     std::to_string(a) + ": target " +
                                     std::to_string(entry.target) + " out of range");
                }
            }
        }
    }
    if (rewards_ && rewards_->size() != actions_.size()) {
        throw ModelError("rewards array has " + std::to_string(rewards_->size()) +
                         " entries for " + std::to_string(actions_.size()) + " states");
    }
}

double ExplicitMdp::state_reward(StateId state) const {
    if (!rewards_) {
        throw ModelError("model carries no rewards");
    }
    return (*rewards_)[state];
}

bool ExplicitMdp::is_markov_chain() const {
    return std::all_of(actions_.begin(), actions_.end(),
                       [](const auto& acts) { return acts.size() == 1; });
}

ExplicitMdp parse_model(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ModelError("model document is not a JSON object");
    }
    if (!doc.contains("type") || doc["type"] != "mdp") {
        throw ModelError("missing or unsupported \"type\" (expected \"mdp\")");
    }
    if (!doc.contains("states") || !doc["states"].is_number_unsigned()) {
        throw ModelError("missing state count");
    }
    const StateId num_states = doc["states"].get<StateId>();
    if (num_states == 0) {
        throw ModelError("model has no states");
    }
    if (!doc.contains("initial") || !doc["initial"].is_number_unsigned()) {
        throw ModelError("missing initial state");
    }
    const StateId initial = doc["initial"].get<StateId>();
    if (!doc.contains("actions") || !doc["actions"].is_array()) {
        throw ModelError("missing actions array");
    }
    const auto& actions_doc = doc["actions"];
    if (actions_doc.size() != num_states) {
        throw ModelError("actions array has " + std::to_string(actions_doc.size()) +
                         " entries for " + std::to_string(num_states) + " states");
    }

    std::vector<std::vector<MdpAction>> actions(num_states);
    for (StateId s = 0; s < num_states; ++s) {
        const auto& state_doc = actions_doc[s];
        if (!state_doc.is_array() || state_doc.empty()) {
            throw ModelError("state " + std::to_string(s) + ": empty action set");
        }
        actions[s].reserve(state_doc.size());
        for (std::size_t a = 0; a < state_doc.size(); ++a) {
            const auto& action_doc = state_doc[a];
            const std::string where = "state " + std::to_string(s) + " action " + std::to_string(a);
            if (!action_doc.is_object() || !action_doc.contains("dist") ||
                !action_doc["dist"].is_array() || action_doc["dist"].empty()) {
                throw ModelError(where + ": missing distribution");
            }
            MdpAction action;
            if (action_doc.contains("label")) {
                if (!action_doc["label"].is_string()) {
                    throw ModelError(where + ": label is not a string");
                }
                action.label = action_doc["label"].get<std::string>();
            }
            std::vector<DistributionEntry> entries;
            entries.reserve(action_doc["dist"].size());
            for (const auto& pair : action_doc["dist"]) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                    !pair[1].is_number()) {
                    throw ModelError(where + ": distribution entries must be [target, probability]");
                }
                entries.push_back({pair[0].get<StateId>(), pair[1].get<double>()});
            }
            try {
                action.distribution = Distribution::create(std::move(entries));
            } catch (const ModelError& e) {
                throw ModelError(where + ": " + e.what());
            }
            for (const auto& entry : action.distribution) {
                if (entry.target >= num_states) {
                    throw ModelError(where + ": target " + std::to_string(entry.target) +
                                     " out of range");
                }
            }
            actions[s].push_back(std::move(action));
        }
    }

    std::optional<std::vector<double>> rewards;
    if (doc.contains("rewards")) {
        if (!doc["rewards"].is_array()) {
            throw ModelError("rewards is not an array");
        }
        rewards.emplace();
        rewards->reserve(doc["rewards"].size());
        for (const auto& r : doc["rewards"]) {
            if (!r.is_number()) {
                throw ModelError("rewards entries must be numbers");
            }
            rewards->push_back(r.get<double>());
        }
    }

    return ExplicitMdp(initial, std::move(actions), std::move(rewards));
}

std::string serialize_model(const ExplicitMdp& mdp) {
    ordered_json doc;
    doc["type"] = "mdp";
    doc["states"] = mdp.num_states();
    doc["initial"] = mdp.initial_state();
    ordered_json actions = ordered_json::array();
    for (StateId s = 0; s < mdp.num_states(); ++s) {
        ordered_json state_actions = ordered_json::array();
        for (const auto& action : mdp.actions(s)) {
            ordered_json action_doc;
            if (action.label) {
                action_doc["label"] = *action.label;
            }
            ordered_json dist = ordered_json::array();
            for (const auto& entry : action.distribution) {
                dist.push_back({entry.target, entry.probability});
            }
            action_doc["dist"] = std::move(dist);
            state_actions.push_back(std::move(action_doc));
        }
        actions.push_back(std::move(state_actions));
    }
    doc["actions"] = std::move(actions);
    if (mdp.rewards()) {
        doc["rewards"] = *mdp.rewards();
    }
    return doc.dump();
}

std::string model_hash(const ExplicitMdp& mdp) { return sha256_hex(serialize_model(mdp)); }

}  // namespace mdpcore
