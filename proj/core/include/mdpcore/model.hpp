#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdpcore/types.hpp"

namespace mdpcore {

struct DistributionEntry {
    StateId target;
    double probability;
};

/// A probability distribution over successor states. Entries are kept sorted
/// by target, targets are distinct and probabilities strictly positive.
///
/// The sum of probabilities must be within 1e-9 of one; if it is off by more
/// than 1e-12 the distribution is renormalized on acceptance. The dead zone
/// between the two tolerances keeps renormalization idempotent, which the
/// byte-exact serialization round-trip relies on.
class Distribution {
public:
    Distribution() = default;

    /// Validates and canonicalizes. Targets must be distinct.
    static Distribution create(std::vector<DistributionEntry> entries);

    /// Like create(), but duplicate targets are merged by summing first.
    /// Entries with probability zero are dropped. Used by the generators.
    static Distribution merged(std::vector<DistributionEntry> entries);

    static Distribution dirac(StateId target) { return create({{target, 1.0}}); }

    const std::vector<DistributionEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Probability assigned to `target`, zero if outside the support.
    double probability_of(StateId target) const;

private:
    std::vector<DistributionEntry> entries_;
};

struct MdpAction {
    std::optional<std::string> label;
    Distribution distribution;
};

/// Successor-function view of a model: everything the partial-exploration
/// algorithms need. Implementations must be cheap to query per state so that
/// exploring a small fraction of a huge model stays sub-linear overall.
class SuccessorModel {
public:
    virtual ~SuccessorModel() = default;

    virtual StateId num_states() const = 0;
    virtual StateId initial_state() const = 0;
    virtual std::vector<MdpAction> state_actions(StateId state) const = 0;

    virtual bool has_rewards() const { return false; }
    virtual double state_reward(StateId) const {
        throw ModelError("model carries no rewards");
    }
};

/// Immutable explicit-state MDP. A Markov chain is the special case with
/// exactly one action per state. Safe to share across threads.
class ExplicitMdp final : public SuccessorModel {
public:
    ExplicitMdp(StateId initial, std::vector<std::vector<MdpAction>> actions,
                std::optional<std::vector<double>> rewards = std::nullopt);

    StateId num_states() const override { return actions_.size(); }
    StateId initial_state() const override { return initial_; }
    std::vector<MdpAction> state_actions(StateId state) const override {
        return actions_.at(state);
    }

    const std::vector<MdpAction>& actions(StateId state) const { return actions_[state]; }

    bool has_rewards() const override { return rewards_.has_value(); }
    double state_reward(StateId state) const override;
    const std::optional<std::vector<double>>& rewards() const { return rewards_; }

    bool is_markov_chain() const;

private:
    StateId initial_ = 0;
    std::vector<std::vector<MdpAction>> actions_;
    std::optional<std::vector<double>> rewards_;
};

/// Parses the JSON model format. Errors carry the offending state/action.
ExplicitMdp parse_model(std::string_view text);

/// Canonical serialization: fixed field order, states ascending, distribution
/// entries sorted by target, shortest round-trip numbers, no whitespace.
/// serialize(parse(serialize(m))) == serialize(m) byte-exactly.
std::string serialize_model(const ExplicitMdp& mdp);

/// SHA-256 of the canonical serialization, as lowercase hex.
std::string model_hash(const ExplicitMdp& mdp);

}  // namespace mdpcore
