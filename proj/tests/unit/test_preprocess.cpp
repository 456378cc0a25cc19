#include <doctest.h>

#include <algorithm>

#include "inkseg/preprocess.hpp"
#include "helpers.hpp"

using namespace inkseg;

TEST_CASE("remove_repeated_points drops only consecutive duplicates") {
    CHECK(remove_repeated_points(Stroke{{{0, 0}, {0, 0}, {1, 0}}}).points == std::vector<Point>{{0, 0}, {1, 0}});
    const Stroke back{{{0, 0}, {1, 0}, {0, 0}}};
    CHECK(remove_repeated_points(back) == back);
    CHECK(remove_repeated_points(Stroke{{{0, 0}}}).size() == 1);
}

TEST_CASE("uniform normalization lets the wider side dominate") {
    const Character c = normalize_character(test::character({Stroke{{{2, 10}, {4, 11}, {3, 10.5}}}}));
    const auto& p = c.strokes[0].points;
    CHECK(p[0] == Point{0.0, 0.0});
    CHECK(p[1].x == doctest::Approx(1.0));
    CHECK(p[1].y == doctest::Approx(0.5));

    const Character unit = test::character({Stroke{{{0, 0}, {1, 1}, {0.25, 0.75}}}});
    CHECK(normalize_character(unit) == unit);

    CHECK_THROWS_WITH_AS(normalize_character(test::character({Stroke{{{3, 3}, {3, 3}}}})), "degenerate character",
                         InkError);
}

TEST_CASE("per-axis normalization fills both axes") {
    const Character c =
        normalize_character(test::character({Stroke{{{2, 10}, {4, 11}}}}), NormalizeMode::PerAxis);
    CHECK(c.strokes[0].points[1] == Point{1.0, 1.0});
}

TEST_CASE("resample subdivides uniformly") {
    const Stroke s = resample(Stroke{{{0, 0}, {1, 0}}}, 0.1);
    REQUIRE(s.size() == 11);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.points[i].x == doctest::Approx(0.1 * i).epsilon(1e-12));

    CHECK(resample(Stroke{{{0, 0}, {0.05, 0}}}, 0.1).size() == 2);
}

TEST_CASE("resampled circle keeps every step near delta") {
    const Stroke circle = test::arc({0.5, 0.5}, 0.5, 0, 359, 40);
    const Stroke s = resample(circle, 0.01);
    // Every step except the closing one is exactly delta; the last may be shorter.
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const Point d = s.points[i] - s.points[i - 1];
        CHECK(std::hypot(d.x, d.y) == doctest::Approx(0.01).epsilon(1e-9));
    }
    const Point last = s.points.back() - s.points[s.size() - 2];
    CHECK(std::hypot(last.x, last.y) <= 0.011);
}

TEST_CASE("smoothing") {
    PreprocessParams p;
    p.smooth_window = 3;
    const Stroke straight = test::line({0, 0}, {1, 1}, 9);
    const Stroke sm = smooth(straight, p);
    for (std::size_t i = 0; i < sm.size(); ++i) CHECK(sm.points[i].x == doctest::Approx(sm.points[i].y));

    p.smooth_passes = 0;
    CHECK(smooth(straight, p) == straight);

    p.smooth_passes = 1;
    Stroke zig = test::line({0, 0}, {1, 0}, 11);
    zig.points[5].y = 0.2;
    const Stroke out = smooth(zig, p);
    CHECK(std::abs(out.points[5].y) < 0.2);
    CHECK(out.points.front() == zig.points.front());
    CHECK(out.points.back() == zig.points.back());
}

TEST_CASE("preprocess_character meets spacing and box invariants") {
    Stroke rough = test::arc({3, 7}, 2, 30, 250, 41);
    for (std::size_t i = 0; i < rough.size(); ++i) rough.points[i].x += (i % 2 ? 0.03 : -0.03);
    const Character c = preprocess_character(test::character({rough, Stroke{{{4, 4}}}}), PreprocessParams{});
    CHECK(validate(c).empty());
    double minx = 1, miny = 1, maxv = 0;
    for (const Stroke& s : c.strokes) {
        for (const Point& p : s.points) {
            minx = std::min(minx, p.x);
            miny = std::min(miny, p.y);
            maxv = std::max({maxv, p.x, p.y});
        }
    }
    CHECK(minx == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(miny == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(maxv == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(c.strokes[1].size() == 1);  // a point stroke stays a point stroke
}

TEST_CASE("tracked preprocessing maps endpoints to endpoints") {
    const Character raw = test::character({test::line({0, 0}, {2, 1}, 7)});
    const TrackedCharacter t = preprocess_character_tracked(raw, PreprocessParams{});
    CHECK(t.character == preprocess_character(raw, PreprocessParams{}));
    REQUIRE(t.index_map.size() == 1);
    CHECK(t.index_map[0].front() == 1);
    CHECK(t.index_map[0].back() == t.character.strokes[0].size());
    CHECK(std::is_sorted(t.index_map[0].begin(), t.index_map[0].end()));
}
