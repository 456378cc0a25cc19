#pragma once

#include <string>
#include <string_view>

#include "inkseg/ink.hpp"

namespace inkseg {

/// Parses an ink JSON document:
///
///   {"version":1, "y_down":false, "label":null|int, "meta":{...},
///    "strokes":[{"points":[[x,y],...]},...]}
///
/// Screen-coordinate documents (`y_down: true`) are reflected about the
/// vertical extent of the character so that y increases upward. Throws
/// InkError naming the offending stroke/point.
Character parse_ink(std::string_view text);

/// Writes the canonical compact form: fixed key order, 9 significant digits,
/// `y_down:false`, trailing newline. parse_ink(serialize_ink(c)) is a fixed
/// point after one cycle.
std::string serialize_ink(const Character& c);

/// Formats a coordinate with 9 significant digits.
std::string format_real(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace inkseg
