#include <doctest.h>

#include "inkseg/geometry.hpp"
#include "inkseg/rng.hpp"
#include "helpers.hpp"

using namespace inkseg;

TEST_CASE("direction") {
    const Stroke s{{{0, 0}, {0, 0.5}, {1, 1.5}}};
    CHECK(direction(s, 1).dx == 0.0);
    CHECK(direction(s, 1).dy == 1.0);
    CHECK(direction(s, 2).dx == doctest::Approx(std::sqrt(0.5)));
    CHECK(direction(s, 2).dy == doctest::Approx(std::sqrt(0.5)));

    // At the last point the direction closes back onto the first.
    const Stroke sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    CHECK(direction(sq, 4).dx == doctest::Approx(0.0));
    CHECK(direction(sq, 4).dy == doctest::Approx(-1.0));
}

TEST_CASE("direction property and change") {
    const UnitVec x{1, 0}, y{0, 1}, mx{-1, 0};
    CHECK(direction_property(x, y) == 1.0);
    CHECK(direction_property(y, x) == -1.0);
    CHECK(direction_property(x, x) == 0.0);
    CHECK(direction_change(x, x) == 0.0);
    CHECK(direction_change(x, y) == doctest::Approx(90.0));
    CHECK(direction_change(x, mx) == doctest::Approx(180.0));
}

TEST_CASE("point direction and distance") {
    const Stroke s{{{0, 0}, {3, 4}, {5, 4}}};
    CHECK(point_direction(s, 1, 2).dx == doctest::Approx(0.6));
    CHECK(point_direction(s, 1, 2).dy == doctest::Approx(0.8));
    CHECK(point_direction(s, 2, 1).dx == -point_direction(s, 1, 2).dx);
    CHECK(point_direction(s, 1, 2).dx == direction(s, 1).dx);
    CHECK(point_distance(s, 1, 2) == 5.0);
    CHECK(point_distance(s, 2, 2) == 0.0);
    CHECK(point_distance(s, 3, 1) == point_distance(s, 1, 3));
}

TEST_CASE("direction relation sign follows the turn") {
    CHECK(direction_relation(test::line({0, 0}, {1, 0}, 3), 1, 2) == 0.0);

    const Stroke ccw = test::arc({0.5, 0.5}, 0.3, 0, 150, 40);
    const Stroke cw = test::arc({0.5, 0.5}, 0.3, 150, -150, 40);
    for (std::size_t n = 1; n + 2 <= ccw.size(); ++n) {
        for (std::size_t q = n + 1; q + 1 <= ccw.size(); ++q) {
            CHECK(direction_relation(ccw, n, q) > 0.0);
            CHECK(direction_relation(cw, n, q) < 0.0);
            CHECK(direction_relation(ccw, q, n) == direction_relation(ccw, n, q));
        }
    }
}

TEST_CASE("modified direction change") {
    const Stroke straight = test::line({0, 0}, {1, 0}, 20);
    CHECK(modified_direction_change(straight, 10, 3) == 0.0);
    CHECK(total_modified_direction_change(straight, 1, 20, 3) == 0.0);

    const Stroke corner = test::join(test::line({0, 0}, {0.1, 0}, 11), test::line({0.1, 0}, {0.1, 0.1}, 11));
    CHECK(modified_direction_change(corner, 11, 3) == doctest::Approx(90.0));

    // On a circle each chord turn equals the arc angle it spans: m steps of 2 asin(delta / 2r).
    const double r = 0.2, d = 0.01;
    const Stroke circle = test::arc_with_step({0.5, 0.5}, r, 0, 300, d);
    const double expect = 3 * 2 * std::asin(d / (2 * r)) * 180 / std::numbers::pi;
    for (std::size_t n = 4; n + 3 <= circle.size(); ++n) {
        CHECK(modified_direction_change(circle, n, 3) == doctest::Approx(expect).epsilon(1e-9));
    }
    CHECK(total_modified_direction_change(circle, 10, 10, 3) == modified_direction_change(circle, 10, 3));

    const Stroke loop = test::arc_with_step({0.5, 0.5}, 0.16, 0, 360, 0.01);
    // The band excludes three points at each end, so a full loop reads a little short.
    const double est = mdc_turning_estimate(loop, 1, loop.size(), 3);
    CHECK(est >= 180.0);
    CHECK(est <= 360.0);
    CHECK(est == doctest::Approx(360.0).epsilon(0.1));
}

TEST_CASE("mirror law") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Stroke s;
        for (int i = 0; i < 30; ++i) s.points.push_back({rng.uniform(), rng.uniform()});
        const Stroke m = mirror_x(s);
        const auto fs = turning_properties(s), fm = turning_properties(m);
        for (std::size_t i = 0; i < fs.size(); ++i) CHECK(fm[i] == -fs[i]);
        for (std::size_t n = 1; n + 2 <= s.size(); n += 3) {
            CHECK(direction_relation(m, n, n + 1) == -direction_relation(s, n, n + 1));
        }
        for (std::size_t n = 4; n + 3 <= s.size(); ++n) {
            CHECK(modified_direction_change(m, n, 3) == modified_direction_change(s, n, 3));
        }
    }
}

TEST_CASE("closed convex polygons turn once") {
    for (int sides : {8, 16, 64}) {
        Stroke s;
        for (int k = 0; k < sides; ++k) {
            const double a = 2 * std::numbers::pi * k / sides;
            s.points.push_back({std::cos(a), std::sin(a)});
        }
        CHECK(closed_total_direction_change(s) == doctest::Approx(360.0).epsilon(1e-9));
    }
}
