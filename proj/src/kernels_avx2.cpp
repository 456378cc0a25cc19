// Compiled with -mavx2 (see src/CMakeLists.txt); only reached after a runtime
// CPU check in kernels_dispatch.cpp.

#include <immintrin.h>

#include <cmath>

#include "inkseg/kernels.hpp"

namespace inkseg::kernels::avx2 {

namespace {

inline __m256d unit_cross(__m256d ax, __m256d ay, __m256d bx, __m256d by) {
    const __m256d la = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(ay, ay)));
    const __m256d lb = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(bx, bx), _mm256_mul_pd(by, by)));
    const __m256d ux = _mm256_div_pd(ax, la), uy = _mm256_div_pd(ay, la);
    const __m256d vx = _mm256_div_pd(bx, lb), vy = _mm256_div_pd(by, lb);
    return _mm256_sub_pd(_mm256_mul_pd(ux, vy), _mm256_mul_pd(uy, vx));
}

// Scalar tail, same operation order as scalar::relation_row.
inline double unit_cross1(double ax, double ay, double bx, double by) {
    const double la = std::sqrt(ax * ax + ay * ay);
    const double lb = std::sqrt(bx * bx + by * by);
    const double ux = ax / la, uy = ay / la;
    const double vx = bx / lb, vy = by / lb;
    return ux * vy - uy * vx;
}

}  // namespace

void relation_row(const double* x, const double* y, std::size_t count, std::size_t n,
                  double* out) {
    const std::size_t last = count - 1;
    const __m256d xn1 = _mm256_set1_pd(x[n + 1]);
    const __m256d yn1 = _mm256_set1_pd(y[n + 1]);
    const __m256d xn = _mm256_set1_pd(x[n]);
    const __m256d yn = _mm256_set1_pd(y[n]);
    const __m256d bx = _mm256_sub_pd(xn1, xn);
    const __m256d by = _mm256_sub_pd(yn1, yn);

    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d ax = _mm256_sub_pd(xn1, _mm256_loadu_pd(x + q));
        const __m256d ay = _mm256_sub_pd(yn1, _mm256_loadu_pd(y + q));
        _mm256_storeu_pd(out + q, unit_cross(ax, ay, bx, by));
    }
    for (; q < n; ++q) {
        out[q] = unit_cross1(x[n + 1] - x[q], y[n + 1] - y[q], x[n + 1] - x[n], y[n + 1] - y[n]);
    }
    out[n] = 0.0;

    q = n + 1;
    for (; q + 4 <= last; q += 4) {
        const __m256d xq = _mm256_loadu_pd(x + q);
        const __m256d yq = _mm256_loadu_pd(y + q);
        const __m256d xq1 = _mm256_loadu_pd(x + q + 1);
        const __m256d yq1 = _mm256_loadu_pd(y + q + 1);
        const __m256d ax = _mm256_sub_pd(xq1, xn);
        const __m256d ay = _mm256_sub_pd(yq1, yn);
        const __m256d cx = _mm256_sub_pd(xq1, xq);
        const __m256d cy = _mm256_sub_pd(yq1, yq);
        _mm256_storeu_pd(out + q, unit_cross(ax, ay, cx, cy));
    }
    for (; q < last; ++q) {
        out[q] = unit_cross1(x[q + 1] - x[n], y[q + 1] - y[n], x[q + 1] - x[q], y[q + 1] - y[q]);
    }
}

void distance_row(const double* x, const double* y, std::size_t count, std::size_t n,
                  double* out) {
    const __m256d px = _mm256_set1_pd(x[n]);
    const __m256d py = _mm256_set1_pd(y[n]);
    std::size_t q = 0;
    for (; q + 4 <= count; q += 4) {
        const __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(x + q));
        const __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(y + q));
        _mm256_storeu_pd(out + q,
                         _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy))));
    }
    for (; q < count; ++q) {
        const double dx = x[n] - x[q];
        const double dy = y[n] - y[q];
        out[q] = std::sqrt(dx * dx + dy * dy);
    }
}

void chord_cosines(const double* x, const double* y, std::size_t count, std::size_t m,
                   double* out) {
    if (count < 2 * m + 1) return;
    std::size_t l = m;
    for (; l + m + 4 <= count; l += 4) {
        const __m256d xl = _mm256_loadu_pd(x + l), yl = _mm256_loadu_pd(y + l);
        const __m256d ax = _mm256_sub_pd(xl, _mm256_loadu_pd(x + l - m));
        const __m256d ay = _mm256_sub_pd(yl, _mm256_loadu_pd(y + l - m));
        const __m256d bx = _mm256_sub_pd(_mm256_loadu_pd(x + l + m), xl);
        const __m256d by = _mm256_sub_pd(_mm256_loadu_pd(y + l + m), yl);
        const __m256d la = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(ay, ay)));
        const __m256d lb = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(bx, bx), _mm256_mul_pd(by, by)));
        const __m256d ux = _mm256_div_pd(ax, la), uy = _mm256_div_pd(ay, la);
        const __m256d vx = _mm256_div_pd(bx, lb), vy = _mm256_div_pd(by, lb);
        _mm256_storeu_pd(out + l, _mm256_add_pd(_mm256_mul_pd(ux, vx), _mm256_mul_pd(uy, vy)));
    }
    for (; l + m < count; ++l) {
        const double ax = x[l] - x[l - m], ay = y[l] - y[l - m];
        const double bx = x[l + m] - x[l], by = y[l + m] - y[l];
        const double la = std::sqrt(ax * ax + ay * ay);
        const double lb = std::sqrt(bx * bx + by * by);
        out[l] = (ax / la) * (bx / lb) + (ay / la) * (by / lb);
    }
}

}  // namespace inkseg::kernels::avx2
