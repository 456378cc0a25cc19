#include "inkseg/ink_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace inkseg {

using nlohmann::json;

namespace {

double coordinate(const json& v, std::size_t stroke, std::size_t point, const char* axis) {
    if (!v.is_number()) {
        throw InkError("stroke " + std::to_string(stroke) + " point " + std::to_string(point) +
                       ": " + axis + " is not a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw InkError("non-finite coordinate at stroke " + std::to_string(stroke) + " point " +
                       std::to_string(point));
    }
    return d;
}

}  // namespace

Character parse_ink(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InkError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw InkError("malformed document: top level is not an object");

    for (const auto& [key, _] : doc.items()) {
        if (key != "version" && key != "y_down" && key != "label" && key != "meta" &&
            key != "strokes") {
            throw InkError("malformed document: unknown key '" + key + "'");
        }
    }
    if (!doc.contains("version") || doc["version"] != 1) {
        throw InkError("malformed document: version must be 1");
    }
    bool y_down = false;
    if (doc.contains("y_down")) {
        if (!doc["y_down"].is_boolean()) throw InkError("malformed document: y_down not boolean");
        y_down = doc["y_down"].get<bool>();
    }

    Character c;
    if (doc.contains("label") && !doc["label"].is_null()) {
        if (!doc["label"].is_number_integer()) {
            throw InkError("malformed document: label must be an integer or null");
        }
        c.label = doc["label"].get<int>();
    }
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) throw InkError("malformed document: meta not an object");
        c.meta_json = doc["meta"].dump();
    }

    if (!doc.contains("strokes") || !doc["strokes"].is_array()) {
        throw InkError("malformed document: strokes array missing");
    }
    const auto& strokes = doc["strokes"];
    if (strokes.empty()) throw InkError("malformed document: no strokes");
    for (std::size_t i = 0; i < strokes.size(); ++i) {
        const auto& js = strokes[i];
        const std::size_t si = i + 1;
        if (!js.is_object() || !js.contains("points") || !js["points"].is_array() ||
            js.size() != 1) {
            throw InkError("malformed stroke " + std::to_string(si));
        }
        const auto& pts = js["points"];
        if (pts.empty()) throw InkError("empty stroke " + std::to_string(si));
        Stroke s;
        s.points.reserve(pts.size());
        for (std::size_t n = 0; n < pts.size(); ++n) {
            const auto& jp = pts[n];
            if (!jp.is_array() || jp.size() != 2) {
                throw InkError("stroke " + std::to_string(si) + " point " + std::to_string(n + 1) +
                               ": expected [x,y]");
            }
            s.points.push_back({coordinate(jp[0], si, n + 1, "x"),
                                coordinate(jp[1], si, n + 1, "y")});
        }
        c.strokes.push_back(std::move(s));
    }

    if (y_down) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& s : c.strokes)
            for (const auto& p : s.points) {
                lo = std::min(lo, p.y);
                hi = std::max(hi, p.y);
            }
        for (auto& s : c.strokes)
            for (auto& p : s.points) p.y = (lo + hi) - p.y;
    }
    return c;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string serialize_ink(const Character& c) {
    std::string out;
    out.reserve(32 + c.point_count() * 24);
    out += "{\"version\":1,\"y_down\":false,\"label\":";
    out += c.label ? std::to_string(*c.label) : "null";
    out += ",\"meta\":";
    out += json::parse(c.meta_json).dump();
    out += ",\"strokes\":[";
    for (std::size_t i = 0; i < c.strokes.size(); ++i) {
        if (i) out += ',';
        out += "{\"points\":[";
        const auto& pts = c.strokes[i].points;
        for (std::size_t n = 0; n < pts.size(); ++n) {
            if (n) out += ',';
            out += '[';
            out += format_real(pts[n].x);
            out += ',';
            out += format_real(pts[n].y);
            out += ']';
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InkError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InkError("cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace inkseg
