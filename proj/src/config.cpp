#include "inkseg/config.hpp"

#include <cmath>
#include <json.hpp>

#include "inkseg/ink_io.hpp"

namespace inkseg {

using nlohmann::json;

namespace {

const char* mode_name(NormalizeMode m) { return m == NormalizeMode::Uniform ? "uniform" : "per_axis"; }

NormalizeMode mode_from(const std::string& s) {
    if (s == "uniform") return NormalizeMode::Uniform;
    if (s == "per_axis") return NormalizeMode::PerAxis;
    throw InkError("config: normalize must be \"uniform\" or \"per_axis\"");
}

double as_real(const json& v, const std::string& key) {
    if (!v.is_number()) throw InkError("config: " + key + " must be a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw InkError("config: " + key + " must be an integer");
    return v.get<int>();
}

void set_field(Config& c, const std::string& key, const json& v) {
    if (key == "tau_cw") c.tau_cw = as_real(v, key);
    else if (key == "tau_ccw") c.tau_ccw = as_real(v, key);
    else if (key == "tau_cw_ip") c.tau_cw_ip = as_int(v, key);
    else if (key == "tau_ccw_ip") c.tau_ccw_ip = as_int(v, key);
    else if (key == "tau_su_len") c.tau_su_len = as_int(v, key);
    else if (key == "tau_rldc") c.tau_rldc = as_real(v, key);
    else if (key == "tau_tdc_lower") c.tau_tdc_lower = as_real(v, key);
    else if (key == "tau_tdc_upper") c.tau_tdc_upper = as_real(v, key);
    else if (key == "tau_delta") c.tau_delta = as_real(v, key);
    else if (key == "tau_mdc") c.tau_mdc = as_int(v, key);
    else if (key == "tau_lv") c.tau_lv = as_int(v, key);
    else if (key == "delta") c.delta = as_real(v, key);
    else if (key == "epsilon") c.epsilon = as_real(v, key);
    else if (key == "smooth_window") c.smooth_window = as_int(v, key);
    else if (key == "smooth_passes") c.smooth_passes = as_int(v, key);
    else if (key == "normalize") {
        if (!v.is_string()) throw InkError("config: normalize must be a string");
        c.normalize = mode_from(v.get<std::string>());
    } else {
        throw InkError("config: unknown key \"" + key + "\"");
    }
}

}  // namespace

std::vector<std::string> Config::validate() const {
    if (!(tau_cw < 0.0 && tau_ccw > 0.0)) throw InkError("config: need tau_cw < 0 < tau_ccw");
    if (tau_cw_ip < 1 || tau_ccw_ip < 1 || tau_su_len < 1 || tau_mdc < 1 || tau_lv < 1) {
        throw InkError("config: integer thresholds must be >= 1");
    }
    if (!(tau_delta > 0.0)) throw InkError("config: tau_delta must be > 0");
    if (!(epsilon > 0.0)) throw InkError("config: epsilon must be > 0");
    if (!std::isfinite(tau_rldc) || !std::isfinite(tau_tdc_lower) || !std::isfinite(tau_tdc_upper)) {
        throw InkError("config: angle thresholds must be finite");
    }
    preprocess_params().check();

    std::vector<std::string> warnings;
    const Config d;
    const bool counts_default = tau_cw_ip == d.tau_cw_ip && tau_ccw_ip == d.tau_ccw_ip &&
                                tau_su_len == d.tau_su_len && tau_mdc == d.tau_mdc &&
                                tau_lv == d.tau_lv;
    if (delta != d.delta && counts_default) {
        warnings.push_back(
            "delta changed but point-count thresholds (tau_*_ip, tau_su_len, tau_mdc, tau_lv) "
            "are still calibrated for delta = 0.01");
    }
    return warnings;
}

PreprocessParams Config::preprocess_params() const {
    PreprocessParams p;
    p.delta = delta;
    p.smooth_window = smooth_window;
    p.smooth_passes = smooth_passes;
    p.normalize = normalize;
    return p;
}

Config parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InkError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw InkError("config: top level must be an object");
    Config c;
    for (const auto& [key, value] : doc.items()) set_field(c, key, value);
    c.validate();
    return c;
}

Config load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string config_to_json(const Config& c) {
    // ordered_json keeps declaration order in the output.
    nlohmann::ordered_json j;
    j["tau_cw"] = c.tau_cw;
    j["tau_ccw"] = c.tau_ccw;
    j["tau_cw_ip"] = c.tau_cw_ip;
    j["tau_ccw_ip"] = c.tau_ccw_ip;
    j["tau_su_len"] = c.tau_su_len;
    j["tau_rldc"] = c.tau_rldc;
    j["tau_tdc_lower"] = c.tau_tdc_lower;
    j["tau_tdc_upper"] = c.tau_tdc_upper;
    j["tau_delta"] = c.tau_delta;
    j["tau_mdc"] = c.tau_mdc;
    j["tau_lv"] = c.tau_lv;
    j["delta"] = c.delta;
    j["epsilon"] = c.epsilon;
    j["smooth_window"] = c.smooth_window;
    j["smooth_passes"] = c.smooth_passes;
    j["normalize"] = mode_name(c.normalize);
    return j.dump(2) + "\n";
}

void apply_setting(Config& c, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw InkError("config: override must look like key=value");
    }
    const std::string key(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error&) {
        value = text;  // bare words such as per_axis
    }
    set_field(c, key, value);
    c.validate();
}

}  // namespace inkseg
