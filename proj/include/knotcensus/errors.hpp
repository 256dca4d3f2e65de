#pragma once

#include <stdexcept>
#include <string>

namespace knotcensus {

// Thrown when a computation contradicts a property the library certifies.
// Bad caller input raises std::invalid_argument instead; the CLI maps the
// two to different exit codes.
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotcensus
