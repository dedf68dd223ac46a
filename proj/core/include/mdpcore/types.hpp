#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdpcore {

using StateId = std::uint64_t;

/// Raised on malformed model input or invariant violations during construction.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an iterative solver exceeds its sweep cap without reaching the
/// requested precision. Never degraded into a silently imprecise answer.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValueInterval {
    double lower = 0.0;
    double upper = 1.0;

    double width() const { return upper - lower; }
};

enum class BoundStoreKind { dense, sparse };

/// Oracle precision used when re-verifying a learned core: strict-inequality
/// checks against epsilon need slack well below epsilon itself.
inline double verification_delta(double epsilon) {
    return std::min(1e-12, epsilon * 1e-3);
}

}  // namespace mdpcore
