#pragma once

// Hand-built strokes shared by the unit tests.

#include <cmath>
#include <numbers>

#include "inkseg/ink.hpp"

namespace inkseg::test {

inline double rad(double deg) { return deg * std::numbers::pi / 180.0; }

/// `count` points evenly spaced from a to b, both included.
inline Stroke line(Point a, Point b, std::size_t count) {
    Stroke s;
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        s.points.push_back(a + t * (b - a));
    }
    return s;
}

/// `count` points on a circle, polar angle from start_deg over sweep_deg
/// (negative sweeps run clockwise).
inline Stroke arc(Point c, double r, double start_deg, double sweep_deg, std::size_t count) {
    Stroke s;
    for (std::size_t i = 0; i < count; ++i) {
        const double a = rad(start_deg + sweep_deg * static_cast<double>(i) / static_cast<double>(count - 1));
        s.points.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
    return s;
}

/// Arc whose consecutive points are `step` apart.
inline Stroke arc_with_step(Point c, double r, double start_deg, double sweep_deg, double step) {
    const double per = 2.0 * std::asin(step / (2.0 * r)) * 180.0 / std::numbers::pi;
    const auto steps = static_cast<std::size_t>(std::floor(std::abs(sweep_deg) / per));
    return arc(c, r, start_deg, std::copysign(per * static_cast<double>(steps), sweep_deg), steps + 1);
}

inline Stroke join(Stroke a, const Stroke& b) {
    const bool shared = !a.empty() && !b.empty() && a.points.back() == b.points.front();
    a.points.insert(a.points.end(), b.points.begin() + (shared ? 1 : 0), b.points.end());
    return a;
}

inline Character character(std::vector<Stroke> strokes) {
    Character c;
    c.strokes = std::move(strokes);
    return c;
}

}  // namespace inkseg::test
