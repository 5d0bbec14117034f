#pragma once

#include <stdexcept>
#include <string>

namespace fringelab {

// Thrown when an algorithm cannot produce a meaningful result from
// numerically valid input (no fringe minima, non-bracketed fit, ...).
// Input validation failures use std::invalid_argument instead; the CLI
// maps the two categories to different exit codes.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fringelab
