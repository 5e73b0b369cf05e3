#pragma once

#include <stdexcept>
#include <string>

namespace primcensus {

// Domain errors (invalid arguments, violated preconditions) are reported as
// std::domain_error. The types below cover the two other failure classes the
// toolkit distinguishes; the CLI maps each class to its own exit code.

/// A computation refused to run because it would exceed a resource ceiling,
/// or an I/O channel failed.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Persisted data failed validation (corrupt or inconsistent rows).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace primcensus
