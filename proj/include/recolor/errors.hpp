#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

// Malformed external input: bad files, ids out of range, broken rotations.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition does not hold (infeasible lists, k too small, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug, never expected on valid inputs.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace recolor
