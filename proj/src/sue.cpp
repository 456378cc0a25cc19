#include "inkseg/sue.hpp"

#include <algorithm>
#include <json.hpp>

namespace inkseg {

namespace {

std::size_t midpoint(const IndexRange& r) { return (r.start + r.end) / 2; }

// True when some mark of a blocking kind reaches into the gap between a and b.
bool blocked(const std::vector<SegmentMark>& marks, const SegmentMark& a, const SegmentMark& b) {
    if (a.range.end + 1 >= b.range.start) return false;  // no gap
    const IndexRange gap{a.range.end + 1, b.range.start - 1};
    const MarkKind opposite = a.kind == MarkKind::CW ? MarkKind::CCW : MarkKind::CW;
    for (const SegmentMark& x : marks) {
        const bool blocker = x.kind == opposite || x.kind == MarkKind::RLDC || x.kind == MarkKind::Loop;
        if (blocker && x.range.overlaps(gap)) return true;
    }
    return false;
}

// One merge sweep over the curve marks of one kind. Returns true if anything merged.
bool merge_kind(std::vector<SegmentMark>& marks, MarkKind kind, int su_len) {
    std::sort(marks.begin(), marks.end(), mark_before);
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i].kind != kind) continue;
        std::size_t j = i + 1;
        while (j < marks.size() && marks[j].kind != kind) ++j;
        if (j == marks.size()) break;
        SegmentMark& a = marks[i];
        const SegmentMark& b = marks[j];
        if (!(a.is_subunit || b.is_subunit) || blocked(marks, a, b)) continue;
        a.range.end = std::max(a.range.end, b.range.end);
        a.is_subunit = a.range.length() >= static_cast<std::size_t>(su_len);
        marks.erase(marks.begin() + static_cast<std::ptrdiff_t>(j));
        return true;
    }
    return false;
}

}  // namespace

std::vector<SegmentMark> rmcss(std::vector<SegmentMark> marks, const Stroke&, const Config& cfg) {
    bool changed = true;
    while (changed) {
        changed = false;
        while (merge_kind(marks, MarkKind::CW, cfg.tau_su_len)) changed = true;
        while (merge_kind(marks, MarkKind::CCW, cfg.tau_su_len)) changed = true;

        const std::size_t before = marks.size();
        const std::vector<SegmentMark> snapshot = marks;
        std::erase_if(marks, [&](const SegmentMark& m) {
            for (const SegmentMark& x : snapshot) {
                // Pseudo sub-unit overlapping a large direction change.
                if (m.is_pseudo() && x.kind == MarkKind::RLDC && m.range.overlaps(x.range)) return true;
                // Curve mark or large direction change inside a loop. The loop's own
                // turning always leaves a full-length curve mark, so sub-unit marks go too.
                if (m.kind != MarkKind::Loop && x.kind == MarkKind::Loop && x.range.contains(m.range)) {
                    return true;
                }
            }
            return false;
        });
        if (marks.size() != before) changed = true;
    }
    std::sort(marks.begin(), marks.end(), mark_before);
    return marks;
}

Resolution resolve_segmentation_points(const std::vector<SegmentMark>& ordered, const Stroke& s,
                                       const Config&) {
    const std::size_t N = s.size();
    std::vector<RuleHit> raw;
    std::vector<bool> used(ordered.size(), false);

    for (std::size_t j = 0; j < ordered.size(); ++j) {
        if (used[j]) continue;
        const SegmentMark& x = ordered[j];
        auto emit = [&](std::size_t p, int rule) { raw.push_back({std::clamp<std::size_t>(p, 1, N), rule, j}); };

        if (x.kind == MarkKind::Loop) {
            emit(x.range.end + 1, 23);
            continue;
        }
        if (x.kind == MarkKind::RLDC) {
            emit(midpoint(x.range), 24);
            continue;
        }
        if (j + 1 == ordered.size()) break;
        const SegmentMark& y = ordered[j + 1];
        const MarkKind other = x.kind == MarkKind::CW ? MarkKind::CCW : MarkKind::CW;
        const int rule = x.kind == MarkKind::CW ? (x.is_subunit ? 19 : 20) : (x.is_subunit ? 21 : 22);

        if (x.is_subunit) {
            if (y.kind == other && y.is_pseudo()) {
                emit(midpoint(y.range), rule);
                used[j + 1] = true;
            } else if (y.kind == other) {
                emit((x.range.end + y.range.start) / 2, rule);
            } else if (y.kind == MarkKind::Loop) {
                emit(y.range.start, rule);
            } else if (y.kind == MarkKind::RLDC) {
                emit(midpoint(y.range), rule);
                used[j + 1] = true;
            }
        } else {
            if (y.kind == other && y.is_pseudo()) {
                if (x.range.length() > y.range.length()) {
                    emit(midpoint(y.range), rule);
                    used[j + 1] = true;
                } else {
                    emit(midpoint(x.range), rule);
                }
            } else if (y.kind == other || y.kind == MarkKind::Loop || y.kind == MarkKind::RLDC) {
                emit(midpoint(x.range), rule);
            }
        }
    }

    Resolution out;
    out.pi.push_back(1);
    if (N > 1) out.pi.push_back(N);
    for (const RuleHit& h : raw) {
        if (h.point <= 1 || h.point >= N) continue;
        if (std::find(out.pi.begin(), out.pi.end(), h.point) != out.pi.end()) continue;
        out.pi.push_back(h.point);
        out.hits.push_back(h);
    }
    std::sort(out.pi.begin(), out.pi.end());
    std::sort(out.hits.begin(), out.hits.end(),
              [](const RuleHit& a, const RuleHit& b) { return a.point < b.point; });
    return out;
}

namespace {

// Majority coverage by the raw detector marks. Extracted sub-units carry no
// label in the original method; this is the smallest rule that agrees with
// what the detectors saw.
Label label_subunit(const IndexRange& r, const Detections& d) {
    auto covered = [&](const std::vector<SegmentMark>& marks) {
        std::size_t count = 0;
        for (const SegmentMark& m : marks) {
            if (!m.range.overlaps(r)) continue;
            count += std::min(m.range.end, r.end) - std::max(m.range.start, r.start) + 1;
        }
        return count;
    };
    const std::size_t len = r.length();
    if (2 * covered(d.loops) > len) return Label::Loop;
    const std::size_t cw = covered(d.cw), ccw = covered(d.ccw);
    if (2 * cw >= len && cw >= ccw) return Label::CW;
    if (2 * ccw >= len) return Label::CCW;
    return Label::Straight;
}

}  // namespace

SegmentationResult sue(const Stroke& s, const Config& cfg, std::size_t stroke_index) {
    SegmentationResult out;
    const std::size_t N = s.size();
    if (N == 0) throw InkError("sue: empty stroke");
    if (N <= 2) {
        out.pi = N == 1 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{1, N};
        out.subunits.push_back({stroke_index, {1, N}, Label::PointStroke});
        out.subunit_rules.push_back(std::nullopt);
        return out;
    }

    const Detections det = detect_all(s, cfg);
    out.marks = rmcss(det.all(), s, cfg);
    Resolution res = resolve_segmentation_points(out.marks, s, cfg);
    out.pi = std::move(res.pi);
    out.hits = std::move(res.hits);

    for (std::size_t m = 0; m + 1 < out.pi.size(); ++m) {
        const bool last = m + 2 == out.pi.size();
        const IndexRange r{out.pi[m], last ? out.pi[m + 1] : out.pi[m + 1] - 1};
        out.subunits.push_back({stroke_index, r, label_subunit(r, det)});
        std::optional<int> rule;
        for (const RuleHit& h : out.hits) {
            if (h.point == r.start) rule = h.rule;
        }
        out.subunit_rules.push_back(rule);
    }
    return out;
}

std::vector<SegmentationResult> segment_character(const Character& c, const Config& cfg) {
    std::vector<SegmentationResult> out;
    out.reserve(c.strokes.size());
    for (std::size_t i = 0; i < c.strokes.size(); ++i) out.push_back(sue(c.strokes[i], cfg, i + 1));
    return out;
}

std::vector<SubUnit> all_subunits(const std::vector<SegmentationResult>& r) {
    std::vector<SubUnit> out;
    for (const auto& s : r) out.insert(out.end(), s.subunits.begin(), s.subunits.end());
    return out;
}

std::string segmentation_to_json(const std::vector<SegmentationResult>& r) {
    nlohmann::ordered_json doc;
    doc["strokes"] = nlohmann::ordered_json::array();
    for (const SegmentationResult& s : r) {
        nlohmann::ordered_json stroke;
        stroke["pi"] = s.pi;
        stroke["subunits"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < s.subunits.size(); ++i) {
            nlohmann::ordered_json u;
            u["range"] = {s.subunits[i].range.start, s.subunits[i].range.end};
            u["label"] = std::string(to_string(s.subunits[i].label));
            if (s.subunit_rules[i]) u["rule"] = *s.subunit_rules[i];
            else u["rule"] = nullptr;
            stroke["subunits"].push_back(std::move(u));
        }
        doc["strokes"].push_back(std::move(stroke));
    }
    return doc.dump() + "\n";
}

}  // namespace inkseg
