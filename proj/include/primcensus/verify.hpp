#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

namespace primcensus {

// Thrown by run_verify when a named invariant fails; the CLI maps it to
// exit code 3.
class VerifyFailure : public std::runtime_error {
public:
    VerifyFailure(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Runs the cross-module invariant suite at desk scale, printing one
// "ok <name>" line per check. Fails fast with VerifyFailure.
void run_verify(std::ostream& out);

}  // namespace primcensus
