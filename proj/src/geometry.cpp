#include "inkseg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "inkseg/kernels.hpp"

namespace inkseg {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

UnitVec unit(Point d, const char* what) {
    const double len = std::sqrt(d.x * d.x + d.y * d.y);
    if (!(len > 0.0)) throw InkError(std::string(what) + ": coincident points");
    return {d.x / len, d.y / len};
}

void require(bool ok, const char* msg) {
    if (!ok) throw InkError(msg);
}

}  // namespace

UnitVec direction(const Stroke& s, std::size_t n) {
    const std::size_t N = s.size();
    require(n >= 1 && n <= N && N >= 2, "direction: index out of range");
    if (n == N) return unit(s.at1(1) - s.at1(N), "direction");
    return unit(s.at1(n + 1) - s.at1(n), "direction");
}

double direction_change(UnitVec v1, UnitVec v2) {
    const double dot = std::clamp(v1.dx * v2.dx + v1.dy * v2.dy, -1.0, 1.0);
    return std::acos(dot) * kRadToDeg;
}

UnitVec point_direction(const Stroke& s, std::size_t n, std::size_t q) {
    require(n != q, "point_direction: n == q");
    require(n >= 1 && q >= 1 && n <= s.size() && q <= s.size(), "point_direction: index out of range");
    return unit(s.at1(q) - s.at1(n), "point_direction");
}

double direction_relation(const Stroke& s, std::size_t n, std::size_t q) {
    const std::size_t N = s.size();
    require(n != q, "direction_relation: n == q");
    if (n > q) std::swap(n, q);
    require(n >= 1 && n + 2 <= N && q + 1 <= N, "direction_relation: index out of range");
    return direction_property(point_direction(s, n, q + 1), point_direction(s, q, q + 1));
}

double modified_direction_change(const Stroke& s, std::size_t n, std::size_t m) {
    require(m >= 1 && n >= m + 1 && n + m <= s.size(),
            "modified_direction_change: index outside the valid band");
    return direction_change(point_direction(s, n - m, n), point_direction(s, n, n + m));
}

std::vector<double> modified_direction_changes(const Stroke& s, std::size_t m) {
    const std::size_t N = s.size();
    std::vector<double> out(N, 0.0);
    if (m == 0 || N < 2 * m + 1) return out;
    const kernels::StrokeSoA soa(s);
    std::vector<double> cosines(N, 1.0);
    kernels::chord_cosines(soa, m, cosines);
    for (std::size_t l = m; l + m < N; ++l) {
        out[l] = std::acos(std::clamp(cosines[l], -1.0, 1.0)) * kRadToDeg;
    }
    return out;
}

double total_modified_direction_change(const Stroke& s, std::size_t n, std::size_t q,
                                       std::size_t m) {
    require(n <= q, "total_modified_direction_change: n > q");
    require(n >= 1 && q <= s.size(), "total_modified_direction_change: index out of range");
    double total = 0.0;
    for (std::size_t l = std::max(n, m + 1); l <= q && l + m <= s.size(); ++l) {
        total += modified_direction_change(s, l, m);
    }
    return total;
}

double mdc_turning_estimate(const Stroke& s, std::size_t n, std::size_t q, std::size_t m) {
    return total_modified_direction_change(s, n, q, m) / static_cast<double>(m);
}

double point_distance(const Stroke& s, std::size_t n, std::size_t q) {
    require(n >= 1 && q >= 1 && n <= s.size() && q <= s.size(), "point_distance: index out of range");
    const Point d = s.at1(n) - s.at1(q);
    return std::sqrt(d.x * d.x + d.y * d.y);
}

std::vector<double> turning_properties(const Stroke& s) {
    const std::size_t N = s.size();
    std::vector<double> f(N, 0.0);
    for (std::size_t n = 2; n + 1 <= N; ++n) {
        f[n - 1] = direction_property(direction(s, n - 1), direction(s, n));
    }
    return f;
}

double closed_total_direction_change(const Stroke& s) {
    const std::size_t N = s.size();
    require(N >= 3, "closed_total_direction_change: need at least 3 points");
    double total = direction_change(direction(s, N), direction(s, 1));  // at p_1
    for (std::size_t n = 2; n <= N; ++n) {
        total += direction_change(direction(s, n - 1), direction(s, n));
    }
    return total;
}

}  // namespace inkseg
