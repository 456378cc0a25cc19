#pragma once

// Sub-unit extraction for handwritten strokes: clean up the raw detector marks
// (merge/removal), turn consecutive mark pairs into segmentation points, and
// cut the stroke at those points.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "inkseg/config.hpp"
#include "inkseg/detectors.hpp"
#include "inkseg/ink.hpp"

namespace inkseg {

/// Merges same-orientation curve marks with nothing in between (a sub-unit
/// mark absorbs its neighbour), drops pseudo marks that overlap a large
/// direction change, and drops curve marks and large direction changes that
/// sit inside a loop. Repeats until nothing changes, so applying it twice
/// equals applying it once. Output is position-sorted.
std::vector<SegmentMark> rmcss(std::vector<SegmentMark> marks, const Stroke& s, const Config& cfg);

/// One interior segmentation point and where it came from.
struct RuleHit {
    std::size_t point = 0;  // 1-based
    int rule = 0;           // 19..24
    std::size_t mark = 0;   // 0-based index into the ordered marks (first of the pair)
};

struct Resolution {
    std::vector<std::size_t> pi;  // 1 and N included, strictly increasing
    std::vector<RuleHit> hits;    // one per interior point of pi, in pi order
};

/// Scans consecutive pairs of the ordered marks. A pair whose first element is
/// a pseudo mark or large direction change whose midpoint was already used is
/// skipped. Midpoints are floor((a + b) / 2).
Resolution resolve_segmentation_points(const std::vector<SegmentMark>& ordered, const Stroke& s,
                                       const Config& cfg);

struct SegmentationResult {
    std::vector<std::size_t> pi;
    std::vector<SubUnit> subunits;
    /// Rule that produced each sub-unit's first point; empty for the first one.
    std::vector<std::optional<int>> subunit_rules;
    std::vector<SegmentMark> marks;  // the ordered marks the rules ran on
    std::vector<RuleHit> hits;
};

SegmentationResult sue(const Stroke& s, const Config& cfg, std::size_t stroke_index = 1);

/// sue on every stroke in writing order.
std::vector<SegmentationResult> segment_character(const Character& c, const Config& cfg);

/// Concatenated sub-units of a whole character.
std::vector<SubUnit> all_subunits(const std::vector<SegmentationResult>& r);

/// {"strokes":[{"pi":[...],"subunits":[{"range":[a,b],"label":"cw","rule":19|null}]}]}
std::string segmentation_to_json(const std::vector<SegmentationResult>& r);

}  // namespace inkseg
