#include <doctest.h>

#include "inkseg/detectors.hpp"
#include "inkseg/geometry.hpp"
#include "inkseg/ideal.hpp"
#include "inkseg/preprocess.hpp"
#include "inkseg/synth.hpp"
#include "helpers.hpp"

using namespace inkseg;

namespace {
constexpr double kDelta = 0.01;
}

TEST_CASE("primitives") {
    const Stroke line = gen_primitive(make_line({0, 0}, {0, 1}), kDelta);
    REQUIRE(line.size() == 101);
    for (double fd : turning_properties(line)) CHECK(fd == 0.0);

    CHECK(classify_single_subunit(gen_primitive(make_arc({0.5, 0.5}, 0.2, 90, -120), kDelta), kDelta) == Label::CW);

    const Stroke loop = gen_primitive(make_loop({0.5, 0.5}, 0.1, 0, false), kDelta);
    CHECK(point_distance(loop, 1, loop.size()) == doctest::Approx(kDelta).epsilon(1e-9));
    CHECK(closed_total_direction_change(loop) == doctest::Approx(360.0).epsilon(1e-9));

    CHECK_THROWS_AS(gen_primitive(make_line({0.3, 0.3}, {0.3, 0.3}), kDelta), InkError);
}

TEST_CASE("composed characters carry their truth") {
    const Composed f13 = compose_character(fig13_spec(kDelta), kDelta);
    CHECK(f13.character.strokes.size() == 4);
    CHECK(f13.truth.subunit_count() == 4);
    std::vector<Label> labels;
    for (const auto& s : f13.truth.strokes) labels.insert(labels.end(), s.labels.begin(), s.labels.end());
    CHECK(labels == std::vector<Label>{Label::CW, Label::CW, Label::Straight, Label::Straight});

    const Composed f20 = compose_character(fig20_spec(kDelta), kDelta);
    CHECK(f20.character.strokes.size() == 1);
    CHECK(f20.truth.strokes[0].pi.size() == 6);  // five sub-units plus the end point

    const Composed one = compose_character({{make_line({0.1, 0.1}, {0.5, 0.1})}}, kDelta);
    CHECK(one.truth.strokes[0].pi == std::vector<std::size_t>{1, one.character.strokes[0].size()});

    // Ideal segmentation recovers every composed boundary.
    for (const auto& spec : {fig13_spec(kDelta), fig17_spec(kDelta), fig20_spec(kDelta)}) {
        const Composed c = compose_character(spec, kDelta);
        for (std::size_t i = 0; i < c.character.strokes.size(); ++i) {
            CHECK(find_ideal_segmentation_points(c.character.strokes[i], kDelta) == c.truth.strokes[i].pi);
        }
    }
}

TEST_CASE("perturbation") {
    const Composed c = compose_character(fig20_spec(kDelta), kDelta);
    NoiseParams none;
    none.seed = 4;
    CHECK(perturb(c.character, c.truth, none) == c.character);

    NoiseParams noise;
    noise.jitter_sigma = 0.004;
    noise.bow = 0.015;
    noise.warp = 1.0;
    noise.elastic = 0.04;
    noise.jitter_corr = 8.0;
    noise.seed = 99;
    const Character a = perturb(c.character, c.truth, noise);
    CHECK(a == perturb(c.character, c.truth, noise));
    CHECK(a.strokes[0].size() == c.character.strokes[0].size());
    noise.seed = 100;
    CHECK_FALSE(a == perturb(c.character, c.truth, noise));

    noise.jitter_sigma = -1;
    CHECK_THROWS_AS(perturb(c.character, c.truth, noise), InkError);
}

TEST_CASE("a gently bowed line stays below the curve threshold") {
    // After normalization a 0.02 bow has curvature near 0.5, while the anchor
    // proximity rule only sees turning within about six points. Over that span
    // the chord and step differ by ~0.03 rad, well under tau = 0.1.
    const Config cfg;
    const Composed c = compose_character({{make_line({0.1, 0.5}, {0.9, 0.5})}}, kDelta);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        NoiseParams bow;
        bow.bow = 0.02;
        bow.seed = seed;
        const Stroke s = preprocess_character(perturb(c.character, c.truth, bow), cfg.preprocess_params()).strokes[0];
        CHECK(fcwss(s, cfg).size() + fccwss(s, cfg).size() == 0);
    }
    // The same detector does pick up a bend tight enough to register locally.
    const Stroke bent = test::arc_with_step({0.5, 0.5}, 0.2, 200, -140, kDelta);
    CHECK(fcwss(bent, cfg).size() == 1);
}

TEST_CASE("ground truth follows preprocessing") {
    const Composed c = compose_character(fig17_spec(kDelta), kDelta);
    const TrackedCharacter t = preprocess_character_tracked(c.character, PreprocessParams{});
    const GroundTruth g = remap_ground_truth(c.truth, t);
    for (std::size_t i = 0; i < g.strokes.size(); ++i) {
        CHECK(g.strokes[i].pi.front() == 1);
        CHECK(g.strokes[i].pi.back() == t.character.strokes[i].size());
    }
    CHECK(parse_ground_truth(ground_truth_to_json(g)).strokes.size() == g.strokes.size());
}

TEST_CASE("manifest and corpus") {
    const Manifest m = shipped_manifest();
    CHECK(m.classes.size() == 10);
    CHECK(manifest_to_json(parse_manifest(manifest_to_json(m))) == manifest_to_json(m));

    Manifest small = m;
    small.train_per_class = 2;
    small.test_per_class = 1;
    small.classes.resize(3);
    const auto corpus = generate_corpus(small);
    CHECK(corpus.size() == 9);
    const auto again = generate_corpus(small);
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(corpus[i].ink == again[i].ink);
    CHECK(corpus[0].file_stem() == "c01_train_000");

    small.seed += 1;
    CHECK_FALSE(generate_corpus(small)[0].ink == corpus[0].ink);

    CHECK_THROWS_AS(parse_manifest("{}"), InkError);
}
