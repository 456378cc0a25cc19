#include <doctest.h>

#include "inkseg/ideal.hpp"
#include "inkseg/synth.hpp"
#include "helpers.hpp"

using namespace inkseg;

namespace {

constexpr double kDelta = 0.01;

Stroke only_stroke(const CharacterSpec& spec) { return compose_character(spec, kDelta).character.strokes.at(0); }

}  // namespace

TEST_CASE("single sub-unit labels") {
    CHECK(classify_single_subunit(Stroke{{{0, 0}, {1, 0}}}, kDelta) == Label::PointStroke);
    CHECK(classify_single_subunit(test::line({0, 0}, {0, 0.19}, 20), kDelta) == Label::Straight);
    CHECK(classify_single_subunit(test::arc({0.5, 0.5}, 0.2, 90, -120, 30), kDelta) == Label::CW);
    CHECK(classify_single_subunit(test::arc({0.5, 0.5}, 0.2, 90, 120, 30), kDelta) == Label::CCW);

    const Stroke loop = gen_primitive(make_loop({0.5, 0.5}, 0.1, 0, true), kDelta);
    CHECK(is_ideal_loop(loop, kDelta));
    CHECK(classify_single_subunit(loop, kDelta) == Label::Loop);

    const Stroke s_curve = test::join(test::arc({0.3, 0.5}, 0.1, 0, 90, 10), test::arc({0.3, 0.7}, 0.1, 270, -90, 10));
    CHECK_THROWS_WITH_AS(classify_single_subunit(s_curve, kDelta), "not a single sub-unit stroke", InkError);
}

TEST_CASE("segmentation points of ideal strokes") {
    const Stroke one = test::arc({0.5, 0.5}, 0.2, 90, -150, 40);
    CHECK(find_ideal_segmentation_points(one, kDelta) == std::vector<std::size_t>{1, one.size()});

    // Clockwise then counter-clockwise: one cut where the turn changes sign.
    const Composed two = compose_character({StrokeBuilder({0.2, 0.5}, 90, kDelta).arc(0.15, -90).arc(0.15, 90).specs()}, kDelta);
    const auto pi = find_ideal_segmentation_points(two.character.strokes[0], kDelta);
    CHECK(pi.size() == 3);
    CHECK(pi == two.truth.strokes[0].pi);

    // Lead-in, loop, tail: the loop is delimited by its closure.
    const Composed looped = compose_character(
        {StrokeBuilder({0.1, 0.5}, 0, kDelta).line(0.3).loop(0.08, true).line(0.3).specs()}, kDelta);
    CHECK(find_ideal_segmentation_points(looped.character.strokes[0], kDelta) == looped.truth.strokes[0].pi);
    CHECK(looped.truth.strokes[0].labels == std::vector<Label>{Label::Straight, Label::Loop, Label::Straight});
}

TEST_CASE("extracted sub-units partition the stroke") {
    const Stroke one = test::arc({0.5, 0.5}, 0.2, 90, -150, 40);
    const auto single = extract_ideal_subunits(one, kDelta, 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0].range == IndexRange{1, one.size()});
    CHECK(single[0].stroke_index == 3);
    CHECK(single[0].label == Label::CW);

    const Stroke s = only_stroke(fig20_spec(kDelta));
    const auto units = extract_ideal_subunits(s, kDelta);
    REQUIRE(units.size() == 5);
    CHECK(units.front().range.start == 1);
    CHECK(units.back().range.end == s.size());
    for (std::size_t i = 1; i < units.size(); ++i) CHECK(units[i].range.start == units[i - 1].range.end + 1);
}

TEST_CASE("figure characters") {
    const Composed f13 = compose_character(fig13_spec(kDelta), kDelta);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < f13.character.strokes.size(); ++i) {
        for (const SubUnit& u : extract_ideal_subunits(f13.character.strokes[i], kDelta, i + 1)) labels.push_back(u.label);
    }
    CHECK(labels == std::vector<Label>{Label::CW, Label::CW, Label::Straight, Label::Straight});

    const auto first17 = extract_ideal_subunits(only_stroke(fig17_spec(kDelta)), kDelta);
    REQUIRE(first17.size() == 2);
    CHECK(first17[0].label == Label::CW);
    CHECK(first17[1].label == Label::CW);
}

TEST_CASE("generation count") {
    CHECK(generation_count(0) == 1);
    CHECK(generation_count(1) == 2);
    CHECK(generation_count(4) == 384);
    CHECK_THROWS_AS(generation_count(17), InkError);
    CHECK_THROWS_AS(generation_count(-1), InkError);
}
