#pragma once

#include <stdexcept>
#include <string>

namespace cq {

// Thrown when a brute-force request exceeds its configured cutoff.
class CutoffError : public std::runtime_error {
public:
    CutoffError(const std::string& what, unsigned cutoff)
        : std::runtime_error(what), cutoff_(cutoff) {}

    unsigned cutoff() const noexcept { return cutoff_; }

private:
    unsigned cutoff_;
};

// Thrown when a redundant internal cross-check disagrees with the primary
// computation. Indicates a bug; callers are not expected to recover.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cq
