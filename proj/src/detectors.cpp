#include "inkseg/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inkseg/geometry.hpp"
#include "inkseg/kernels.hpp"

namespace inkseg {

std::string_view to_string(MarkKind k) {
    switch (k) {
        case MarkKind::Loop: return "loop";
        case MarkKind::RLDC: return "rldc";
        case MarkKind::CW: return "cw";
        case MarkKind::CCW: return "ccw";
    }
    return "?";
}

bool mark_before(const SegmentMark& a, const SegmentMark& b) {
    if (a.range.start != b.range.start) return a.range.start < b.range.start;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.range.end < b.range.end;
}

std::vector<IndexRange> runs_of(const std::vector<bool>& flags) {
    std::vector<IndexRange> runs;
    std::size_t n = 0;
    while (n < flags.size()) {
        if (!flags[n]) {
            ++n;
            continue;
        }
        const std::size_t first = n;
        while (n < flags.size() && flags[n]) ++n;
        runs.push_back({first + 1, n});
    }
    return runs;
}

std::vector<int> relation_row_sums(const Stroke& s, const Config& cfg, Turn turn) {
    const std::size_t N = s.size();
    std::vector<int> sums(N, 0);
    if (N < 3) return sums;

    const bool cw = turn == Turn::Clockwise;
    const double tau = cw ? cfg.tau_cw : cfg.tau_ccw;
    const std::size_t ip = static_cast<std::size_t>(cw ? cfg.tau_cw_ip : cfg.tau_ccw_ip);
    auto related = [&](double g) { return cw ? g <= tau : g >= tau; };

    const kernels::StrokeSoA soa(s);
    std::vector<double> row(N - 1);
    // Anchors are 0-based a in [0, N-3]; partners q in [0, N-2], q != a.
    for (std::size_t a = 0; a + 2 < N; ++a) {
        kernels::relation_row(soa, a, row);
        std::size_t q = 0;
        while (q < row.size()) {
            if (q == a || !related(row[q])) {
                ++q;
                continue;
            }
            const std::size_t first = q;
            while (q < row.size() && q != a && related(row[q])) ++q;
            const std::size_t last = q - 1;
            // Anchor proximity: (n1 - ip) <= n <= (n2 + ip).
            if (a + ip >= first && a <= last + ip) {
                const std::size_t upto = std::min(last, a);  // partners with index <= anchor
                if (first <= upto) sums[a] += static_cast<int>(upto - first + 1);
            }
        }
    }
    return sums;
}

namespace {

std::vector<SegmentMark> curve_marks(const Stroke& s, const Config& cfg, Turn turn) {
    const auto sums = relation_row_sums(s, cfg, turn);
    std::vector<bool> flags(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) flags[i] = sums[i] > 0;
    std::vector<SegmentMark> marks;
    const MarkKind kind = turn == Turn::Clockwise ? MarkKind::CW : MarkKind::CCW;
    for (const IndexRange& r : runs_of(flags)) {
        const bool full = r.length() >= static_cast<std::size_t>(cfg.tau_su_len);
        marks.push_back({kind, r, full});
    }
    return marks;
}

}  // namespace

std::vector<SegmentMark> fcwss(const Stroke& s, const Config& cfg) {
    return curve_marks(s, cfg, Turn::Clockwise);
}

std::vector<SegmentMark> fccwss(const Stroke& s, const Config& cfg) {
    return curve_marks(s, cfg, Turn::CounterClockwise);
}

bool loop_tangents_meet(const Stroke& s, std::size_t n, std::size_t q, const Config& cfg) {
    const std::size_t lv = static_cast<std::size_t>(cfg.tau_lv);
    if (n < 1 || q > s.size() || n + lv > s.size() || q <= lv) return false;
    const Point pn = s.at1(n), pnl = s.at1(n + lv);
    const Point pq = s.at1(q), pql = s.at1(q - lv);
    if (pn == pnl || pq == pql) return false;

    const double s1 = (pn.y - pnl.y) / (pn.x - pnl.x + cfg.epsilon);
    const double s2 = (pq.y - pql.y) / (pq.x - pql.x + cfg.epsilon);
    const double b1 = pn.y - s1 * pn.x;
    const double b2 = pq.y - s2 * pq.x;
    const double sx = (b2 - b1) / (s1 - s2);
    const double sy = s1 * sx + b1;
    if (!std::isfinite(sx) || !std::isfinite(sy)) return false;  // parallel tangents

    const UnitVec v1 = point_direction(s, n + lv, n);
    const UnitVec v2 = point_direction(s, q - lv, q);
    const double d1 = v1.dx * (sx - pn.x) + v1.dy * (sy - pn.y);
    const double d2 = v2.dx * (sx - pq.x) + v2.dy * (sy - pq.y);
    return d1 > 0.0 || d2 > 0.0;
}

std::vector<SegmentMark> flss(const Stroke& s, const Config& cfg) {
    const std::size_t N = s.size();
    const std::size_t m = static_cast<std::size_t>(cfg.tau_mdc);
    if (N < 2 * static_cast<std::size_t>(cfg.tau_lv) + 3) return {};

    const auto theta = modified_direction_changes(s, m);
    const double lo = 360.0 - cfg.tau_tdc_lower;
    const double hi = 360.0 + cfg.tau_tdc_upper;
    const kernels::StrokeSoA soa(s);
    std::vector<double> dist(N);

    // Closest qualifying partner of every start point (0-based).
    struct Best {
        bool found = false;
        std::size_t q = 0;
        double d = std::numeric_limits<double>::infinity();
    };
    std::vector<Best> best(N);
    for (std::size_t a = 0; a + 1 < N; ++a) {
        kernels::distance_row(soa, a, dist);
        double total = 0.0;  // T^{mdc} over [a, b], summed in index order
        for (std::size_t b = a; b < N; ++b) {
            total += theta[b];
            if (b == a || dist[b] > cfg.tau_delta) continue;
            const double turning = total / static_cast<double>(m);
            if (turning < lo || turning > hi) continue;
            if (dist[b] < best[a].d) best[a] = {true, b, dist[b]};
        }
    }

    std::vector<bool> candidate(N);
    for (std::size_t a = 0; a < N; ++a) candidate[a] = best[a].found;

    std::vector<bool> covered(N, false);
    for (const IndexRange& group : runs_of(candidate)) {
        std::size_t win = group.start - 1;
        for (std::size_t a = group.start - 1; a < group.end; ++a) {
            if (best[a].d < best[win].d) win = a;
        }
        const std::size_t n = win + 1, q = best[win].q + 1;
        if (!loop_tangents_meet(s, n, q, cfg)) continue;
        for (std::size_t i = n; i <= q; ++i) covered[i - 1] = true;
    }

    std::vector<SegmentMark> marks;
    for (const IndexRange& r : runs_of(covered)) marks.push_back({MarkKind::Loop, r, true});
    return marks;
}

std::vector<SegmentMark> frldc(const Stroke& s, const Config& cfg) {
    const std::size_t m = static_cast<std::size_t>(cfg.tau_mdc);
    if (s.size() < 2 * m + 1) return {};
    const auto theta = modified_direction_changes(s, m);
    std::vector<bool> flags(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) flags[i] = theta[i] >= cfg.tau_rldc;
    std::vector<SegmentMark> marks;
    for (const IndexRange& r : runs_of(flags)) marks.push_back({MarkKind::RLDC, r, false});
    return marks;
}

std::vector<SegmentMark> Detections::all() const {
    std::vector<SegmentMark> out;
    for (const auto* v : {&cw, &ccw, &loops, &rldc}) out.insert(out.end(), v->begin(), v->end());
    std::sort(out.begin(), out.end(), mark_before);
    return out;
}

Detections detect_all(const Stroke& s, const Config& cfg) {
    return {fcwss(s, cfg), fccwss(s, cfg), flss(s, cfg), frldc(s, cfg)};
}

}  // namespace inkseg
