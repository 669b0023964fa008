#pragma once

#include <stdexcept>
#include <string>

namespace mtcut {

// Caller-facing misuse: bad ids, malformed files, violated preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation refused to run because a size guard would be exceeded.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant check. A failure here is a bug in the solver, never a
// user error, so it throws logic_error instead of returning a result.
inline void check_invariant(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("invariant violated: " + what);
}

}  // namespace mtcut
