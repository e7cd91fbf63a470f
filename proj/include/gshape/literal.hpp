#pragma once

// Gaussian-integer literal syntax shared by the CLI and JSON output:
//   "a", "bi", "a+bi", "a-bi", with an optional single space on either side
//   of the inner sign (e.g. "-20+15i", "-20 + 15i").

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gshape/gaussian.hpp"

namespace gshape {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Parses a Gaussian-integer literal; throws parse_error on malformed input.
GaussianInt parse_gaussian(const std::string& text);

/// Canonical formatting: "0", "a", "bi", "a+bi", "a-bi" (no spaces).
/// parse_gaussian(format_gaussian(z)) == z for every z.
std::string format_gaussian(GaussianInt z);

}  // namespace gshape
