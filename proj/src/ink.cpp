#include "inkseg/ink.hpp"

#include <algorithm>
#include <cmath>

namespace inkseg {

std::size_t Character::point_count() const {
    std::size_t n = 0;
    for (const auto& s : strokes) n += s.size();
    return n;
}

std::string_view to_string(Label l) {
    switch (l) {
        case Label::CW: return "cw";
        case Label::CCW: return "ccw";
        case Label::Straight: return "straight";
        case Label::Loop: return "loop";
        case Label::PointStroke: return "point";
        case Label::Unlabeled: return "unlabeled";
    }
    return "unlabeled";
}

Label label_from_string(std::string_view s) {
    for (Label l : {Label::CW, Label::CCW, Label::Straight, Label::Loop, Label::PointStroke,
                    Label::Unlabeled}) {
        if (to_string(l) == s) return l;
    }
    throw InkError("unknown label '" + std::string(s) + "'");
}

std::string Diagnostic::to_string() const {
    std::string out;
    if (stroke != 0) out += "stroke " + std::to_string(stroke);
    if (point != 0) out += (out.empty() ? "" : " ") + std::string("point ") + std::to_string(point);
    if (!out.empty()) out += ": ";
    return out + rule;
}

std::vector<Diagnostic> validate(const Character& c) {
    std::vector<Diagnostic> out;
    if (c.strokes.empty()) out.push_back({0, 0, "character has no strokes"});
    for (std::size_t i = 0; i < c.strokes.size(); ++i) {
        const auto& pts = c.strokes[i].points;
        if (pts.empty()) {
            out.push_back({i + 1, 0, "empty stroke"});
            continue;
        }
        for (std::size_t n = 0; n < pts.size(); ++n) {
            const Point p = pts[n];
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                out.push_back({i + 1, n + 1, "non-finite coordinate"});
                continue;
            }
            if (p.x < 0.0 || p.x > 1.0) out.push_back({i + 1, n + 1, "x out of [0,1]"});
            if (p.y < 0.0 || p.y > 1.0) out.push_back({i + 1, n + 1, "y out of [0,1]"});
            if (n > 0 && pts[n - 1] == p) out.push_back({i + 1, n + 1, "repeated point"});
        }
    }
    return out;
}

Stroke mirror_x(const Stroke& s) {
    Stroke out = s;
    for (auto& p : out.points) p.x = -p.x;
    return out;
}

Stroke reversed(const Stroke& s) {
    Stroke out = s;
    std::reverse(out.points.begin(), out.points.end());
    return out;
}

}  // namespace inkseg
