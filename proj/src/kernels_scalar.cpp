#include <cmath>

#include "inkseg/kernels.hpp"

namespace inkseg::kernels {

StrokeSoA::StrokeSoA(const Stroke& s) {
    x.reserve(s.size());
    y.reserve(s.size());
    for (const auto& p : s.points) {
        x.push_back(p.x);
        y.push_back(p.y);
    }
}

namespace scalar {

namespace {

// cross(unit(a), unit(b)) with the exact operation order of the SIMD variant.
inline double unit_cross(double ax, double ay, double bx, double by) {
    const double la = std::sqrt(ax * ax + ay * ay);
    const double lb = std::sqrt(bx * bx + by * by);
    const double ux = ax / la, uy = ay / la;
    const double vx = bx / lb, vy = by / lb;
    return ux * vy - uy * vx;
}

}  // namespace

void relation_row(const double* x, const double* y, std::size_t count, std::size_t n,
                  double* out) {
    const std::size_t last = count - 1;  // partners run over [0, last)
    const double bx = x[n + 1] - x[n];
    const double by = y[n + 1] - y[n];
    for (std::size_t q = 0; q < n; ++q) {
        out[q] = unit_cross(x[n + 1] - x[q], y[n + 1] - y[q], bx, by);
    }
    out[n] = 0.0;
    for (std::size_t q = n + 1; q < last; ++q) {
        out[q] = unit_cross(x[q + 1] - x[n], y[q + 1] - y[n], x[q + 1] - x[q], y[q + 1] - y[q]);
    }
}

void distance_row(const double* x, const double* y, std::size_t count, std::size_t n,
                  double* out) {
    const double px = x[n], py = y[n];
    for (std::size_t q = 0; q < count; ++q) {
        const double dx = px - x[q];
        const double dy = py - y[q];
        out[q] = std::sqrt(dx * dx + dy * dy);
    }
}

void chord_cosines(const double* x, const double* y, std::size_t count, std::size_t m,
                   double* out) {
    if (count < 2 * m + 1) return;
    for (std::size_t l = m; l + m < count; ++l) {
        const double ax = x[l] - x[l - m], ay = y[l] - y[l - m];
        const double bx = x[l + m] - x[l], by = y[l + m] - y[l];
        const double la = std::sqrt(ax * ax + ay * ay);
        const double lb = std::sqrt(bx * bx + by * by);
        const double ux = ax / la, uy = ay / la;
        const double vx = bx / lb, vy = by / lb;
        out[l] = ux * vx + uy * vy;
    }
}

}  // namespace scalar

const KernelTable& scalar_table() {
    static const KernelTable t{"scalar", &scalar::relation_row, &scalar::distance_row,
                               &scalar::chord_cosines};
    return t;
}

}  // namespace inkseg::kernels
