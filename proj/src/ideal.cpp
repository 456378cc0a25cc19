#include "inkseg/ideal.hpp"

#include <algorithm>
#include <cmath>

#include "inkseg/geometry.hpp"

namespace inkseg {

namespace {

constexpr double kClosureSlack = 1e-6;
constexpr double kTurnTolerance = 1e-3;

Stroke slice(const Stroke& s, std::size_t first, std::size_t last) {
    Stroke out;
    out.points.assign(s.points.begin() + static_cast<std::ptrdiff_t>(first - 1),
                      s.points.begin() + static_cast<std::ptrdiff_t>(last));
    return out;
}

struct LoopSpan {
    std::size_t first;
    std::size_t last;
};

bool closes(double gap, double delta) { return std::abs(gap - delta) <= delta * kClosureSlack; }

// Closed sub-strokes [a, c] whose end gap is one step and which turn once. A
// tangent approach can leave a shorter gap one index earlier; that is not a
// closure. Spans do not overlap; for each start the longest closing span wins.
std::vector<LoopSpan> find_loops(const Stroke& s, double delta) {
    std::vector<LoopSpan> loops;
    const std::size_t N = s.size();
    for (std::size_t a = 1; a + 3 <= N; ++a) {
        for (std::size_t c = N; c >= a + 3; --c) {
            if (!closes(point_distance(s, a, c), delta)) continue;
            const Stroke sub = slice(s, a, c);
            if (std::abs(closed_total_direction_change(sub) - 360.0) <= kTurnTolerance) {
                loops.push_back({a, c});
                a = c;  // resume after this loop
                break;
            }
        }
    }
    return loops;
}

Label label_by_dominant_sign(const std::vector<double>& f) {
    int neg = 0, pos = 0, zero = 0;
    for (std::size_t n = 1; n + 1 < f.size(); ++n) {
        switch (ideal_sign(f[n])) {
            case -1: ++neg; break;
            case 1: ++pos; break;
            default: ++zero; break;
        }
    }
    if (neg > pos && neg > zero) return Label::CW;
    if (pos > neg && pos > zero) return Label::CCW;
    return Label::Straight;
}

}  // namespace

int ideal_sign(double fd) {
    if (fd > kIdealZero) return 1;
    if (fd < -kIdealZero) return -1;
    return 0;
}

bool is_ideal_loop(const Stroke& s, double delta) {
    if (s.size() < 3) return false;
    if (!closes(point_distance(s, 1, s.size()), delta)) return false;
    return std::abs(closed_total_direction_change(s) - 360.0) <= kTurnTolerance;
}

Label classify_single_subunit(const Stroke& s, double delta) {
    const std::size_t N = s.size();
    if (N <= 2) return Label::PointStroke;
    const auto f = turning_properties(s);
    for (std::size_t n = 2; n + 2 <= N; ++n) {
        if (ideal_sign(f[n - 1]) != ideal_sign(f[n])) {
            throw InkError("not a single sub-unit stroke");
        }
    }
    if (is_ideal_loop(s, delta)) return Label::Loop;
    switch (ideal_sign(f[1])) {
        case -1: return Label::CW;
        case 1: return Label::CCW;
        default: return Label::Straight;
    }
}

std::vector<std::size_t> find_ideal_segmentation_points(const Stroke& s, double delta) {
    const std::size_t N = s.size();
    if (N < 3) return N == 1 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{1, N};

    const auto f = turning_properties(s);
    auto sgn = [&](std::size_t n) { return ideal_sign(f[n - 1]); };

    // Sign changes between interior points n and n+1, 2 < n < N-2.
    std::vector<std::size_t> changes;
    for (std::size_t n = 3; n + 3 <= N; ++n) {
        if (sgn(n) != sgn(n + 1)) changes.push_back(n + 1);
    }
    // A single point whose sign differs from both neighbours is a transition
    // point (a corner between two regions), not a region: it yields the pair
    // {k, k+1}, which collapses to the corner k.
    std::vector<std::size_t> pi;
    for (std::size_t i = 0; i < changes.size(); ++i) {
        pi.push_back(changes[i]);
        if (i + 1 < changes.size() && changes[i + 1] == changes[i] + 1) ++i;
    }

    for (const LoopSpan& loop : find_loops(s, delta)) {
        const std::size_t after = std::min(loop.last + 1, N);
        std::erase_if(pi, [&](std::size_t p) { return p >= loop.first && p <= after; });
        pi.push_back(loop.first);
        pi.push_back(after);
    }

    pi.push_back(1);
    pi.push_back(N);
    std::sort(pi.begin(), pi.end());
    pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
    return pi;
}

std::vector<SubUnit> extract_ideal_subunits(const Stroke& s, double delta,
                                            std::size_t stroke_index) {
    std::vector<SubUnit> out;
    const std::size_t N = s.size();
    if (N <= 2) {
        out.push_back({stroke_index, {1, N}, Label::PointStroke});
        return out;
    }
    const auto pi = find_ideal_segmentation_points(s, delta);
    for (std::size_t m = 0; m + 1 < pi.size(); ++m) {
        const bool last = (m + 2 == pi.size());
        const IndexRange r{pi[m], last ? pi[m + 1] : pi[m + 1] - 1};
        const Stroke sub = slice(s, r.start, r.end);
        Label label;
        try {
            label = classify_single_subunit(sub, delta);
        } catch (const InkError&) {
            // Sign changes inside the excluded end margins; fall back to the majority.
            label = label_by_dominant_sign(turning_properties(sub));
        }
        out.push_back({stroke_index, r, label});
    }
    return out;
}

std::uint64_t generation_count(int n_subunits) {
    if (n_subunits < 0) throw InkError("generation_count: negative sub-unit count");
    if (n_subunits > 16) throw InkError("generation_count: result exceeds 64 bits");
    std::uint64_t result = 1;
    for (int k = 1; k <= n_subunits; ++k) result *= 2ull * static_cast<std::uint64_t>(k);
    return result;
}

}  // namespace inkseg
