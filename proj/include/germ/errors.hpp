#pragma once

#include <stdexcept>
#include <string>

namespace germ {

/// Malformed or inconsistent user input (files, case labels, parameters).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input the algorithms do not support (e.g. a
/// non-diagonal linear part).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// A violated internal invariant; always a bug, never an input problem.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace germ
