#pragma once

// Batch commands behind the inkseg executable. Each returns a report; the
// executable prints it and exits non-zero when any input failed.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inkseg/config.hpp"
#include "inkseg/features.hpp"
#include "inkseg/ink.hpp"

namespace inkseg {

struct FileReport {
    std::string file;  // name relative to the input directory
    bool ok = true;
    std::string error;
    std::size_t strokes = 0;
    std::map<std::string, std::size_t> subunits;  // by label; segment only
    std::optional<int> label;                     // eval: true class
    std::optional<int> predicted;                 // eval: one per feature mode, last mode wins
};

struct RunReport {
    std::string command;
    std::vector<FileReport> files;  // input order
    std::vector<std::string> notes;
    std::map<std::string, double> accuracy;  // eval: feature mode -> test accuracy
    std::optional<double> elapsed_ms;        // only when timing was requested

    bool ok() const;
    std::string to_json() const;
};

/// Input files of a command: the path itself, or every *.json directly inside
/// a directory (side-car *.truth.json and *.seg.json skipped), sorted by name.
std::vector<std::string> list_inputs(const std::string& path);

RunReport cmd_preprocess(const std::string& in, const std::string& out, const Config& cfg);

/// Writes <stem>.seg.json per input and, with svg, <stem>.svg.
RunReport cmd_segment(const std::string& in, const std::string& out, const Config& cfg, bool svg);

/// Writes manifest.json, train/ and test/ ink files and truth/<stem>.truth.json.
/// An empty manifest path uses the shipped recipe.
RunReport cmd_synth(const std::string& manifest_path, const std::string& out);

enum class FeatureMode { Global, LocalGlobal };

std::string to_string(FeatureMode m);
FeatureMode feature_mode_from(const std::string& s);

/// Features of one labelled character: preprocess (optional), segment, extract.
FeatureVector character_features(const Character& c, const Config& cfg, FeatureMode mode,
                                 bool preprocess);

struct EvalOutcome {
    CentroidModel model;
    std::vector<int> predicted;  // test order
    std::size_t correct = 0;
    double accuracy() const;
    std::size_t total = 0;
};

/// Trains on `train`, classifies `test`. Every character needs a label; a test
/// label missing from training is an error.
EvalOutcome evaluate(const std::vector<Character>& train, const std::vector<Character>& test,
                     const Config& cfg, FeatureMode mode, bool preprocess);

/// With model_out set, the model of the last mode is written there.
RunReport cmd_eval(const std::string& train_dir, const std::string& test_dir, const Config& cfg,
                   const std::vector<FeatureMode>& modes, bool preprocess,
                   const std::string& model_out = {});

}  // namespace inkseg
