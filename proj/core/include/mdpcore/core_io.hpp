#pragma once

#include <string>
#include <string_view>

#include "mdpcore/learncore.hpp"

namespace mdpcore {

/// Shortest round-trip decimal representation (used for all CSV output).
std::string format_double(double value);

std::string sha256_hex(std::string_view data);

/// Core file format: a single JSON object with the model hash, epsilon,
/// horizon ("unbounded" or a number), heuristic, seed, ascending state list,
/// the oracle-verified exit upper bound, bound-store parameters for bounded
/// cores, and run statistics. Deterministic: identical runs produce
/// byte-identical files (wall time is excluded).
std::string core_to_json(const CoreResult& core, const std::string& model_hash);

/// Parses a core file; fills `model_hash_out` when non-null.
CoreResult core_from_json(std::string_view text, std::string* model_hash_out);

}  // namespace mdpcore
