#include "inkseg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <json.hpp>

#include "inkseg/ink_io.hpp"
#include "inkseg/preprocess.hpp"
#include "inkseg/sue.hpp"
#include "inkseg/svg.hpp"
#include "inkseg/synth.hpp"

namespace fs = std::filesystem;

namespace inkseg {

namespace {

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string stem_of(const std::string& path) {
    std::string name = fs::path(path).filename().string();
    if (ends_with(name, ".json")) name.resize(name.size() - 5);
    return name;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InkError("cannot create directory " + dir + ": " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

}  // namespace

bool RunReport::ok() const {
    return std::all_of(files.begin(), files.end(), [](const FileReport& f) { return f.ok; });
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["ok"] = ok();
    j["notes"] = notes;
    j["files"] = nlohmann::ordered_json::array();
    for (const FileReport& f : files) {
        nlohmann::ordered_json e;
        e["file"] = f.file;
        e["status"] = f.ok ? "ok" : "error";
        if (!f.ok) e["error"] = f.error;
        e["strokes"] = f.strokes;
        if (!f.subunits.empty()) e["subunits"] = f.subunits;
        if (f.label) e["label"] = *f.label;
        if (f.predicted) e["predicted"] = *f.predicted;
        j["files"].push_back(std::move(e));
    }
    if (!accuracy.empty()) j["accuracy"] = accuracy;
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j.dump(1) + "\n";
}

std::vector<std::string> list_inputs(const std::string& path) {
    if (!fs::exists(path)) throw InkError("no such file or directory: " + path);
    if (!fs::is_directory(path)) return {path};
    std::vector<std::string> out;
    for (const auto& entry : fs::directory_iterator(path)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (!ends_with(name, ".json") || ends_with(name, ".truth.json") || ends_with(name, ".seg.json")) continue;
        out.push_back(entry.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

RunReport cmd_preprocess(const std::string& in, const std::string& out, const Config& cfg) {
    cfg.validate();
    RunReport report;
    report.command = "preprocess";
    ensure_dir(out);
    for (const std::string& path : list_inputs(in)) {
        FileReport f;
        f.file = fs::path(path).filename().string();
        try {
            const Character c = preprocess_character(parse_ink(read_file(path)), cfg.preprocess_params());
            f.strokes = c.strokes.size();
            write_file(join(out, f.file), serialize_ink(c));
        } catch (const std::exception& e) {
            f.ok = false;
            f.error = e.what();
        }
        report.files.push_back(std::move(f));
    }
    return report;
}

RunReport cmd_segment(const std::string& in, const std::string& out, const Config& cfg, bool svg) {
    cfg.validate();
    RunReport report;
    report.command = "segment";
    ensure_dir(out);
    for (const std::string& path : list_inputs(in)) {
        FileReport f;
        f.file = fs::path(path).filename().string();
        try {
            const Character c = parse_ink(read_file(path));
            const auto seg = segment_character(c, cfg);
            f.strokes = c.strokes.size();
            for (const SubUnit& u : all_subunits(seg)) ++f.subunits[std::string(to_string(u.label))];
            const std::string stem = stem_of(path);
            write_file(join(out, stem + ".seg.json"), segmentation_to_json(seg));
            if (svg) write_file(join(out, stem + ".svg"), render_svg(c, seg));
        } catch (const std::exception& e) {
            f.ok = false;
            f.error = e.what();
        }
        report.files.push_back(std::move(f));
    }
    return report;
}

RunReport cmd_synth(const std::string& manifest_path, const std::string& out) {
    const Manifest m = manifest_path.empty() ? shipped_manifest() : parse_manifest(read_file(manifest_path));
    RunReport report;
    report.command = "synth";
    if (manifest_path.empty()) report.notes.push_back("manifest: shipped recipe");
    for (const char* sub : {"train", "test", "truth"}) ensure_dir(join(out, sub));
    write_file(join(out, "manifest.json"), manifest_to_json(m));
    for (const Sample& s : generate_corpus(m)) {
        const std::string stem = s.file_stem();
        FileReport f;
        f.file = s.split + "/" + stem + ".json";
        f.strokes = s.ink.strokes.size();
        f.label = s.class_id;
        write_file(join(join(out, s.split), stem + ".json"), serialize_ink(s.ink));
        write_file(join(join(out, "truth"), stem + ".truth.json"), ground_truth_to_json(s.truth));
        report.files.push_back(std::move(f));
    }
    return report;
}

std::string to_string(FeatureMode m) { return m == FeatureMode::Global ? "global" : "local+global"; }

FeatureMode feature_mode_from(const std::string& s) {
    if (s == "global") return FeatureMode::Global;
    if (s == "local+global") return FeatureMode::LocalGlobal;
    throw InkError("unknown feature mode \"" + s + "\" (global or local+global)");
}

FeatureVector character_features(const Character& raw, const Config& cfg, FeatureMode mode, bool preprocess) {
    const Character c = preprocess ? preprocess_character(raw, cfg.preprocess_params()) : raw;
    if (mode == FeatureMode::Global) return global_features(c);
    return local_global_features(segment_character(c, cfg), c, cfg);
}

double EvalOutcome::accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

EvalOutcome evaluate(const std::vector<Character>& train, const std::vector<Character>& test,
                     const Config& cfg, FeatureMode mode, bool preprocess) {
    std::vector<LabeledFeatures> data;
    for (const Character& c : train) {
        if (!c.label) throw InkError("evaluate: unlabelled training character");
        data.push_back({character_features(c, cfg, mode, preprocess), *c.label});
    }
    EvalOutcome out;
    out.model = train_centroid(data);
    for (const Character& c : test) {
        if (!c.label) throw InkError("evaluate: unlabelled test character");
        if (!std::binary_search(out.model.classes.begin(), out.model.classes.end(), *c.label)) {
            throw InkError("evaluate: test class " + std::to_string(*c.label) + " has no training samples");
        }
        const int p = classify(out.model, character_features(c, cfg, mode, preprocess)).label;
        out.predicted.push_back(p);
        if (p == *c.label) ++out.correct;
        ++out.total;
    }
    return out;
}

RunReport cmd_eval(const std::string& train_dir, const std::string& test_dir, const Config& cfg,
                   const std::vector<FeatureMode>& modes, bool preprocess, const std::string& model_out) {
    cfg.validate();
    RunReport report;
    report.command = "eval";
    auto load = [&](const std::string& dir, bool record) {
        std::vector<Character> chars;
        for (const std::string& path : list_inputs(dir)) {
            FileReport f;
            f.file = fs::path(path).filename().string();
            try {
                Character c = parse_ink(read_file(path));
                if (!c.label) throw InkError("missing label");
                f.strokes = c.strokes.size();
                f.label = c.label;
                chars.push_back(std::move(c));
            } catch (const std::exception& e) {
                f.ok = false;
                f.error = e.what();
            }
            // Training files appear in the report only when they fail.
            if (record || !f.ok) report.files.push_back(std::move(f));
        }
        return chars;
    };
    const std::vector<Character> train = load(train_dir, false);
    const std::vector<Character> test = load(test_dir, true);
    if (!report.ok()) return report;
    if (train.empty()) throw InkError("eval: no training files in " + train_dir);

    for (FeatureMode mode : modes) {
        const EvalOutcome r = evaluate(train, test, cfg, mode, preprocess);
        report.accuracy[to_string(mode)] = r.accuracy();
        for (std::size_t i = 0; i < r.predicted.size(); ++i) report.files[i].predicted = r.predicted[i];
        if (!model_out.empty()) write_file(model_out, model_to_json(r.model));
    }
    return report;
}

}  // namespace inkseg
