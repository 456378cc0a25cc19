#pragma once

#include <string>
#include <vector>

#include "inkseg/ink.hpp"
#include "inkseg/sue.hpp"

namespace inkseg {

/// 512x512 drawing of a character with its sub-units colored black, red,
/// green, blue in writing order, cycling. Point strokes become dots. The unit
/// box maps onto the viewport with a small margin, y pointing up.
std::string render_svg(const Character& c, const std::vector<SegmentationResult>& r);

}  // namespace inkseg
