#pragma once

// Character features and the nearest-centroid classifier used to compare a
// global-only description with one that adds per-sub-unit features.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "inkseg/config.hpp"
#include "inkseg/ink.hpp"
#include "inkseg/sue.hpp"

namespace inkseg {

inline constexpr std::size_t kGlobalSamples = 32;   // per axis
inline constexpr std::size_t kLocalSlots = 8;
inline constexpr std::size_t kLocalSlotWidth = 10;

inline constexpr std::string_view kGlobalSchema = "global-xy32";
inline constexpr std::string_view kLocalSchema = "local-su8x10";
inline constexpr std::string_view kLocalGlobalSchema = "local-su8x10+global-xy32";

struct FeatureVector {
    std::string schema;
    std::vector<double> values;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// x then y coordinates at 32 points equally spaced along the pen-down path
/// of all strokes (pen-up gaps add no length). Throws on an empty character.
FeatureVector global_features(const Character& c);

/// Ten values for each of the first eight sub-units, zero-padded: label
/// one-hot (cw, ccw, straight, loop, point), path length over the character's
/// path length, centroid x and y, heading from first to last point over pi, and
/// the turning estimate over the sub-unit divided by 360.
FeatureVector local_features(const std::vector<SegmentationResult>& r, const Character& c,
                             const Config& cfg);

/// local_features followed by global_features.
FeatureVector local_global_features(const std::vector<SegmentationResult>& r, const Character& c,
                                    const Config& cfg);

struct LabeledFeatures {
    FeatureVector features;
    int label = 0;
};

struct CentroidModel {
    std::string schema;
    std::vector<int> classes;                  // ascending
    std::vector<std::vector<double>> centroids;  // z-scored, one per class
    std::vector<double> mean;
    std::vector<double> scale;                 // standard deviation, 1 where it is 0

    friend bool operator==(const CentroidModel&, const CentroidModel&) = default;
};

/// Z-scores with the training mean and standard deviation, then averages each
/// class. Throws on an empty set or mixed schemas.
CentroidModel train_centroid(const std::vector<LabeledFeatures>& data);

struct Classification {
    int label = 0;
    std::vector<double> scores;  // negative Euclidean distance, in model class order
};

/// Nearest centroid; ties go to the lowest class id. Throws on schema or
/// length mismatch.
Classification classify(const CentroidModel& m, const FeatureVector& f);

std::string model_to_json(const CentroidModel& m);
CentroidModel parse_model(std::string_view text);

}  // namespace inkseg
