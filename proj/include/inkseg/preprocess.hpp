#pragma once

#include <cstddef>
#include <vector>

#include "inkseg/ink.hpp"

namespace inkseg {

enum class NormalizeMode {
    Uniform,  // one scale for both axes, aspect ratio preserved
    PerAxis,  // x and y each stretched onto [0,1]
};

struct PreprocessParams {
    double delta = 0.01;        // target inter-point distance, normalized units
    int smooth_window = 5;      // odd
    int smooth_passes = 1;
    NormalizeMode normalize = NormalizeMode::Uniform;

    void check() const;
};

Stroke remove_repeated_points(const Stroke& s);

/// Maps every coordinate into [0,1]^2 with one affine map shared by all strokes.
/// Throws InkError("degenerate character") when all points coincide.
Character normalize_character(const Character& c, NormalizeMode mode = NormalizeMode::Uniform);

/// Output of resample_tracked: the stroke and, for every output point, its
/// position on the input polyline as a fractional 0-based vertex index.
struct ResampleResult {
    Stroke stroke;
    std::vector<double> source_param;
};

/// Walks the polyline placing each new point at Euclidean distance exactly
/// `delta` from the previous one; the original last point closes the stroke.
Stroke resample(const Stroke& s, double delta);
ResampleResult resample_tracked(const Stroke& s, double delta);

/// Centered moving average, window truncated symmetrically at the ends so the
/// endpoints never move.
Stroke smooth(const Stroke& s, const PreprocessParams& params);

/// Full pipeline: dedup, normalize, resample, smooth, then a second resample and
/// renormalize so that spacing and unit-box bounds both hold on the output.
Character preprocess_character(const Character& c, const PreprocessParams& params);

/// Same as preprocess_character, also reporting where each input point ended up.
struct TrackedCharacter {
    Character character;
    /// index_map[i][n-1] = 1-based output index nearest to input point n of stroke i.
    std::vector<std::vector<std::size_t>> index_map;
};
TrackedCharacter preprocess_character_tracked(const Character& c, const PreprocessParams& params);

}  // namespace inkseg
