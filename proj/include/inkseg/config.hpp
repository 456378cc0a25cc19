#pragma once

// Detector thresholds and preprocessing constants. Defaults are the reference
// threshold values; the point-count thresholds assume the default spacing.

#include <string>
#include <string_view>
#include <vector>

#include "inkseg/preprocess.hpp"

namespace inkseg {

struct Config {
    double tau_cw = -0.1;         // clockwise direction-relation bound
    double tau_ccw = 0.1;         // counter-clockwise bound
    int tau_cw_ip = 6;            // anchor proximity, clockwise runs
    int tau_ccw_ip = 6;           // anchor proximity, counter-clockwise runs
    int tau_su_len = 14;          // curve marks shorter than this are pseudo sub-units
    double tau_rldc = 105.0;      // degrees
    double tau_tdc_lower = 180.0; // loop turning window is [360 - lower, 360 + upper]
    double tau_tdc_upper = 0.0;
    double tau_delta = 0.04;      // loop end-point proximity
    int tau_mdc = 3;              // chord span of the modified direction change
    int tau_lv = 5;               // tangent offset for loop verification
    double delta = 0.01;          // resampling step
    double epsilon = 1e-12;       // slope guard

    int smooth_window = 5;
    int smooth_passes = 1;
    NormalizeMode normalize = NormalizeMode::Uniform;

    bool operator==(const Config&) const = default;

    /// Throws InkError on a broken invariant; returns advisory warnings.
    std::vector<std::string> validate() const;

    PreprocessParams preprocess_params() const;
};

/// Reads a JSON object whose keys are Config field names. Missing keys keep
/// their defaults, unknown keys are rejected.
Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);

/// Every field, in declaration order.
std::string config_to_json(const Config& cfg);

/// Applies one "key=value" override.
void apply_setting(Config& cfg, std::string_view assignment);

}  // namespace inkseg
