#pragma once

// Ground-truth generator: ideal characters composed from labelled primitives,
// a handwriting perturbation model, and the shipped corpus recipe.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "inkseg/ink.hpp"
#include "inkseg/preprocess.hpp"

namespace inkseg {

enum class PrimitiveKind { Line, Arc, Loop, Point };

struct PrimitiveSpec {
    PrimitiveKind kind = PrimitiveKind::Line;
    Point from, to;             // line
    Point center;               // arc, loop
    double radius = 0.0;        // arc, loop (loops adjust it so every chord is delta)
    double start_deg = 0.0;     // arc, loop: polar angle of the first point
    double sweep_deg = 0.0;     // arc: signed, positive is counter-clockwise
    bool ccw = true;            // loop orientation
    Point at;                   // point
    bool reversed = false;      // traverse the sampled points backwards

    Label label() const;
};

PrimitiveSpec make_line(Point from, Point to);
PrimitiveSpec make_arc(Point center, double radius, double start_deg, double sweep_deg);
PrimitiveSpec make_loop(Point center, double radius, double start_deg, bool ccw);
PrimitiveSpec make_point(Point at);

/// Samples a primitive at spacing close to delta; lines and arcs use equal
/// steps, loops are regular polygons with chord exactly delta, so the closure
/// gap is delta as well. Throws InkError on degenerate geometry.
Stroke gen_primitive(const PrimitiveSpec& spec, double delta);

/// Turtle-style helper that produces connected primitives for one stroke.
class StrokeBuilder {
public:
    StrokeBuilder(Point start, double heading_deg, double delta);

    StrokeBuilder& line(double length);
    /// Positive sweep turns left (counter-clockwise).
    StrokeBuilder& arc(double radius, double sweep_deg);
    /// Full loop tangent to the current heading; afterwards the heading points
    /// along the closing chord.
    StrokeBuilder& loop(double radius, bool ccw);
    /// Sharp corner: rotates the heading without moving.
    StrokeBuilder& turn(double deg);

    const std::vector<PrimitiveSpec>& specs() const { return specs_; }
    Point position() const { return pos_; }

private:
    Point pos_;
    double heading_;  // degrees
    double delta_;
    std::vector<PrimitiveSpec> specs_;
};

/// Stroke-level truth. Boundaries are 1-based and follow the sub-unit
/// extraction convention: sub-unit m covers [pi_m, pi_{m+1} - 1], the last one
/// includes pi_last.
struct StrokeTruth {
    std::vector<std::size_t> pi;
    std::vector<Label> labels;            // one per sub-unit
    std::vector<IndexRange> primitives;   // point span of each primitive, junctions shared
};

struct GroundTruth {
    std::vector<StrokeTruth> strokes;
    std::size_t subunit_count() const;
};

using CharacterSpec = std::vector<std::vector<PrimitiveSpec>>;  // strokes of primitives

struct Composed {
    Character character;
    GroundTruth truth;
};

/// Concatenates primitives (consecutive ones share their junction point) and
/// records where each sub-unit starts. The start follows from the sign of the
/// turn at the junction: a junction point turning like the next primitive
/// belongs to it, one turning like the previous primitive belongs to that,
/// and a corner unlike both starts the next one. Loops start at their first
/// point and end at their last.
///
/// Throws InkError on disconnected primitives, primitives shorter than five
/// points, point primitives mixed into longer strokes, adjacent loops, and
/// junctions whose turn matches both neighbours (no sign change to find).
Composed compose_character(const CharacterSpec& spec, double delta);

struct NoiseParams {
    double jitter_sigma = 0.0;  // per-point Gaussian displacement, normalized units
    double bow = 0.0;           // max perpendicular bowing of straight primitives
    std::uint64_t seed = 0;
    double warp = 0.0;          // writer variation: random rotation/shear/scale strength in [0,1]
    double jitter_corr = 0.0;   // correlation length of the jitter, in points (0 = white)
    double elastic = 0.0;       // max displacement of a smooth random field, normalized units
};

/// Bows straight primitives, applies the writer warp and the elastic field,
/// then jitters every point.
/// Deterministic in the seed; stroke and point counts are unchanged.
Character perturb(const Character& c, const GroundTruth& truth, const NoiseParams& noise);

/// Moves raw-index boundaries through the preprocessing index map.
GroundTruth remap_ground_truth(const GroundTruth& truth, const TrackedCharacter& tracked);

std::string ground_truth_to_json(const GroundTruth& truth);
GroundTruth parse_ground_truth(std::string_view text);

// Reference characters used by the structure checks.
CharacterSpec fig13_spec(double delta);  // four single sub-unit strokes: cw, cw, straight, straight
CharacterSpec fig17_spec(double delta);  // cw+cw stroke, then two straight strokes
CharacterSpec fig20_spec(double delta);  // one stroke: straight, ccw, cw, loop, straight

struct ClassSpec {
    int id = 0;
    std::string name;
    CharacterSpec strokes;
};

struct Manifest {
    std::uint64_t seed = 1;
    double delta = 0.01;
    int train_per_class = 30;
    int test_per_class = 10;
    NoiseParams noise;  // noise.seed is ignored; each sample derives its own
    std::vector<ClassSpec> classes;
};

Manifest parse_manifest(std::string_view text);
std::string manifest_to_json(const Manifest& m);

/// Ten classes modelled on the figure shapes plus simple variants, 30 train and
/// 10 test samples each, jitter 0.005, bow 0.015.
Manifest shipped_manifest();

struct Sample {
    std::string split;  // "train" or "test"
    int class_id = 0;
    int index = 0;      // within class and split
    Character ink;      // raw, perturbed, labelled
    GroundTruth truth;  // raw indices
    std::string file_stem() const;
};

/// Every sample of the manifest, train before test, classes in manifest order.
std::vector<Sample> generate_corpus(const Manifest& m);

/// A random ideal character over all five labels, for oracle tests.
Composed random_ideal_character(std::uint64_t seed, double delta);

}  // namespace inkseg
