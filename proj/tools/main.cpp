// inkseg: preprocess, segment, synth and eval over ink JSON files.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "inkseg/cli.hpp"
#include "inkseg/ink_io.hpp"

using namespace inkseg;

namespace {

struct Common {
    std::string config_path;
    std::string out;
    std::vector<std::string> settings;
    bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config) {
    if (needs_config) {
        cmd->add_option("--config", c.config_path, "Config JSON (defaults when omitted)");
        cmd->add_option("--set", c.settings, "Override one config field, key=value")->take_all();
    }
    cmd->add_option("--out", c.out, "Output directory (eval: report file)");
    cmd->add_flag("--timing", c.timing, "Add wall-clock time to the report");
}

Config resolve_config(const Common& c, std::vector<std::string>& notes) {
    Config cfg;
    if (c.config_path.empty()) {
        notes.push_back("config: default thresholds");
    } else {
        cfg = load_config(c.config_path);
        notes.push_back("config: " + c.config_path);
    }
    for (const std::string& s : c.settings) {
        apply_setting(cfg, s);
        notes.push_back("set: " + s);
    }
    for (const std::string& w : cfg.validate()) {
        std::cerr << "warning: " << w << "\n";
        notes.push_back("warning: " + w);
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sub-unit extraction for online handwritten characters"};
    app.require_subcommand(1);

    Common pre_opts, seg_opts, syn_opts, eval_opts;
    std::string pre_in, seg_in, manifest, train_dir, test_dir, features = "both", model_out;
    bool svg = false, no_preprocess = false;

    auto* pre = app.add_subcommand("preprocess", "Dedup, normalize, resample and smooth ink files");
    pre->add_option("input", pre_in, "Ink file or directory")->required();
    add_common(pre, pre_opts, true);
    pre->get_option("--out")->required();

    auto* seg = app.add_subcommand("segment", "Extract sub-units from preprocessed ink");
    seg->add_option("input", seg_in, "Ink file or directory")->required();
    seg->add_flag("--svg", svg, "Also render <stem>.svg");
    add_common(seg, seg_opts, true);
    seg->get_option("--out")->required();

    auto* syn = app.add_subcommand("synth", "Generate a labelled corpus with ground truth");
    syn->add_option("--manifest", manifest, "Corpus manifest (shipped recipe when omitted)");
    add_common(syn, syn_opts, false);
    syn->get_option("--out")->required();

    auto* ev = app.add_subcommand("eval", "Train and test the nearest-centroid classifier");
    ev->add_option("train", train_dir, "Training directory")->required();
    ev->add_option("test", test_dir, "Test directory")->required();
    ev->add_option("--features", features, "global, local+global or both")
        ->check(CLI::IsMember({"global", "local+global", "both"}));
    ev->add_flag("--no-preprocess", no_preprocess, "Inputs are already preprocessed");
    ev->add_option("--model", model_out, "Write the trained model JSON here");
    add_common(ev, eval_opts, true);

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    const Common* used = nullptr;
    try {
        std::vector<std::string> notes;
        if (*pre) {
            used = &pre_opts;
            const Config cfg = resolve_config(pre_opts, notes);
            report = cmd_preprocess(pre_in, pre_opts.out, cfg);
        } else if (*seg) {
            used = &seg_opts;
            const Config cfg = resolve_config(seg_opts, notes);
            report = cmd_segment(seg_in, seg_opts.out, cfg, svg);
        } else if (*syn) {
            used = &syn_opts;
            report = cmd_synth(manifest, syn_opts.out);
        } else {
            used = &eval_opts;
            const Config cfg = resolve_config(eval_opts, notes);
            std::vector<FeatureMode> modes;
            if (features == "both") modes = {FeatureMode::Global, FeatureMode::LocalGlobal};
            else modes = {feature_mode_from(features)};
            report = cmd_eval(train_dir, test_dir, cfg, modes, !no_preprocess, model_out);
        }
        report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (used->timing) {
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    const std::string text = report.to_json();
    if (*ev && !eval_opts.out.empty()) {
        write_file(eval_opts.out, text);
    } else {
        std::cout << text;
    }
    return report.ok() ? 0 : 1;
}
