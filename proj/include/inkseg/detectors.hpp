#pragma once

// The four raw detectors run on a preprocessed stroke: clockwise and
// counter-clockwise curve segments from direction relations, loop segments
// from end-point proximity plus turning, and regions of large direction change.

#include <string_view>
#include <vector>

#include "inkseg/config.hpp"
#include "inkseg/ink.hpp"

namespace inkseg {

// Declaration order is the tie-break order when two marks start together.
enum class MarkKind { Loop, RLDC, CW, CCW };

std::string_view to_string(MarkKind k);

struct SegmentMark {
    MarkKind kind = MarkKind::CW;
    IndexRange range;          // 1-based, inclusive
    bool is_subunit = false;   // CW/CCW: length >= tau_su_len; Loop: true; RLDC: false

    bool is_curve() const { return kind == MarkKind::CW || kind == MarkKind::CCW; }
    bool is_pseudo() const { return is_curve() && !is_subunit; }
    bool operator==(const SegmentMark&) const = default;
};

/// Position order: start index, then kind (Loop < RLDC < CW < CCW), then end.
bool mark_before(const SegmentMark& a, const SegmentMark& b);

enum class Turn { Clockwise, CounterClockwise };

/// Row sums M_n of the relation matrix for one orientation. Element n-1 holds
/// M_n, the number of partners q <= n related to anchor n. A partner is related
/// when it lies in a run of consecutive q with g_{n,q} past the threshold and
/// the anchor sits within tau_ip of that run.
std::vector<int> relation_row_sums(const Stroke& s, const Config& cfg, Turn turn);

std::vector<SegmentMark> fcwss(const Stroke& s, const Config& cfg);
std::vector<SegmentMark> fccwss(const Stroke& s, const Config& cfg);

/// Verified loop segments. Candidate pairs need end points within tau_delta and
/// an mdc turning estimate inside [360 - tau_tdc_lower, 360 + tau_tdc_upper];
/// one closest pair per run of candidate start points is then checked with the
/// tangent-intersection test.
std::vector<SegmentMark> flss(const Stroke& s, const Config& cfg);

/// Tangent-intersection test for a candidate loop [n, q] (1-based).
bool loop_tangents_meet(const Stroke& s, std::size_t n, std::size_t q, const Config& cfg);

std::vector<SegmentMark> frldc(const Stroke& s, const Config& cfg);

struct Detections {
    std::vector<SegmentMark> cw;
    std::vector<SegmentMark> ccw;
    std::vector<SegmentMark> loops;
    std::vector<SegmentMark> rldc;

    /// Every mark, position-sorted.
    std::vector<SegmentMark> all() const;
};

Detections detect_all(const Stroke& s, const Config& cfg);

/// Maximal runs of indices where flags[n-1] is set, as 1-based ranges.
std::vector<IndexRange> runs_of(const std::vector<bool>& flags);

}  // namespace inkseg
