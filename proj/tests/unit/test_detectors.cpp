#include <doctest.h>

#include "inkseg/detectors.hpp"
#include "inkseg/geometry.hpp"
#include "inkseg/rng.hpp"
#include "helpers.hpp"

using namespace inkseg;

namespace {

// Dense relation matrix straight from the definition, one anchor per row:
// entry (n, q) is set when q lies in a maximal run of related partners and the
// anchor is within ip of that run. Row sums count partners q <= n.
std::vector<int> dense_row_sums(const Stroke& s, const Config& cfg, bool cw) {
    const std::size_t N = s.size();
    const double tau = cw ? cfg.tau_cw : cfg.tau_ccw;
    const long ip = cw ? cfg.tau_cw_ip : cfg.tau_ccw_ip;
    std::vector<int> sums(N, 0);
    for (std::size_t n = 1; n + 2 <= N; ++n) {
        std::vector<bool> related(N, false);  // index q, partners 1..N-1
        for (std::size_t q = 1; q + 1 <= N; ++q) {
            if (q == n) continue;
            const double g = direction_relation(s, n, q);
            related[q] = cw ? g <= tau : g >= tau;
        }
        std::vector<std::vector<bool>> M(N + 1, std::vector<bool>(N + 1, false));
        for (std::size_t q = 1; q < N; ++q) {
            if (!related[q] || (q > 1 && related[q - 1])) continue;
            std::size_t last = q;
            while (last + 1 < N && related[last + 1]) ++last;
            const long a = static_cast<long>(n);
            if (static_cast<long>(q) - ip <= a && a <= static_cast<long>(last) + ip) {
                for (std::size_t k = q; k <= last; ++k) M[n][k] = true;
            }
        }
        for (std::size_t q = 1; q <= n; ++q) sums[n - 1] += M[n][q] ? 1 : 0;
    }
    return sums;
}

Stroke wobbly(Rng& rng, std::size_t n) {
    Stroke s;
    Point p{0.5, 0.5};
    double heading = 0, rate = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s.points.push_back(p);
        rate += rng.uniform(-0.04, 0.04);
        rate = std::clamp(rate, -0.2, 0.2);
        heading += rate;
        p = p + 0.01 * Point{std::cos(heading), std::sin(heading)};
    }
    return s;
}

std::vector<IndexRange> ranges(const std::vector<SegmentMark>& marks) {
    std::vector<IndexRange> out;
    for (const auto& m : marks) out.push_back(m.range);
    return out;
}

}  // namespace

TEST_CASE("row sums match the dense relation matrix") {
    Rng rng(5);
    const Config cfg;
    for (int t = 0; t < 25; ++t) {
        const Stroke s = wobbly(rng, 30 + 7 * t);
        CHECK(relation_row_sums(s, cfg, Turn::Clockwise) == dense_row_sums(s, cfg, true));
        CHECK(relation_row_sums(s, cfg, Turn::CounterClockwise) == dense_row_sums(s, cfg, false));
    }
}

TEST_CASE("curve detectors on arcs and lines") {
    const Config cfg;
    // 60 points over a half turn, clockwise.
    const Stroke cw = test::arc({0.5, 0.5}, 0.005 / std::sin(std::numbers::pi / 118), 180, -180, 60);
    const auto marks = fcwss(cw, cfg);
    REQUIRE(marks.size() == 1);
    CHECK(marks[0].range.length() >= 48);
    CHECK(marks[0].is_subunit);
    CHECK(fccwss(cw, cfg).empty());

    const Stroke ccw = mirror_x(cw);
    CHECK(fcwss(ccw, cfg).empty());
    CHECK(ranges(fccwss(ccw, cfg)) == ranges(marks));

    const Stroke straight = test::line({0, 0}, {0.6, 0.3}, 60);
    CHECK(fcwss(straight, cfg).empty());
    CHECK(fccwss(straight, cfg).empty());
}

TEST_CASE("mirror duality on wobbly strokes") {
    Rng rng(9);
    const Config cfg;
    for (int t = 0; t < 20; ++t) {
        const Stroke s = wobbly(rng, 80);
        CHECK(ranges(fccwss(mirror_x(s), cfg)) == ranges(fcwss(s, cfg)));
    }
}

TEST_CASE("loop detector") {
    const Config cfg;
    // Circumference 1, end gap 0.02.
    const double r = 1.0 / (2 * std::numbers::pi);
    const Stroke circle = test::arc({0.5, 0.5}, r, -90, 360.0 * 0.98, 99);
    const auto loops = flss(circle, cfg);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].range.start <= 4);
    CHECK(loops[0].range.end >= circle.size() - 3);

    CHECK(flss(test::arc({0.5, 0.5}, 0.2, 0, 180, 64), cfg).empty());

    // Hairpin: out, tight turn, back along a parallel track 0.02 away.
    const Stroke hairpin = test::join(test::join(test::line({0.8, 0.52}, {0.3, 0.52}, 51),
                                                 test::arc({0.3, 0.51}, 0.01, 90, 180, 4)),
                                      test::line({0.3, 0.50}, {0.8, 0.50}, 51));
    CHECK_FALSE(loop_tangents_meet(hairpin, 1, hairpin.size(), cfg));
    CHECK(flss(hairpin, cfg).empty());
}

TEST_CASE("large direction change detector") {
    const Config cfg;
    const Stroke right = test::join(test::line({0.2, 0.2}, {0.5, 0.2}, 31), test::line({0.5, 0.2}, {0.5, 0.5}, 31));
    CHECK(frldc(right, cfg).empty());

    // 150 degree reversal: the second arm leaves at 30 degrees to the first.
    const double a = test::rad(150);
    const Point apex{0.5, 0.2};
    const Stroke sharp = test::join(test::line({0.2, 0.2}, apex, 31),
                                    test::line(apex, apex + 0.3 * Point{std::cos(a), std::sin(a)}, 31));
    const auto marks = frldc(sharp, cfg);
    REQUIRE(marks.size() == 1);
    CHECK(marks[0].range.contains(31));
    CHECK(marks[0].range.start + marks[0].range.end == 62);
    CHECK_FALSE(marks[0].is_subunit);

    CHECK(frldc(test::arc_with_step({0.5, 0.5}, 0.15, 0, 300, 0.01), cfg).empty());
}

TEST_CASE("runs_of") {
    CHECK(runs_of({}).empty());
    CHECK(runs_of({true, true, false, true}) == std::vector<IndexRange>{{1, 2}, {4, 4}});
}
