#pragma once

// Plain-text design files.
//
//   # comment
//   pg 4
//   kind spread 4 2        (or: kind star <n> <t> <t0>)
//   D,BC,BCD
//   C,AB,ABC
//   ...
//
// One flat per line, points as effect words, or decimal Yates indices when
// reading/writing in numeric mode. '#' starts a comment anywhere on a line.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgiso/designs.hpp"

namespace pgiso {

using Design = std::variant<Spread, Star>;

enum class DesignKind { spread, star };

/// Syntactically valid file contents before any structural validation.
struct RawDesign {
    int n = 0;
    DesignKind kind = DesignKind::spread;
    std::vector<int> params;  // (u, h) or (n, t, t0)
    std::vector<std::vector<Point>> flats;
};

/// Throws pgiso::FormatError on malformed text.
RawDesign parse_raw_design(std::string_view text, bool numeric = false);

/// Throws pgiso::Error when the flats do not form the declared design.
Design build_design(const RawDesign& raw);

Design parse_design(std::string_view text, bool numeric = false);
Design read_design_file(const std::string& path, bool numeric = false);

std::string write_design(const Spread& s, bool numeric = false);
std::string write_design(const Star& s, bool numeric = false);
std::string write_design(const Design& d, bool numeric = false);

/// Ambient dimension of either design kind.
int dimension(const Design& d);

}  // namespace pgiso
