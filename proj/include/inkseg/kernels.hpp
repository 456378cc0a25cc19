#pragma once

// Data-parallel inner loops of the detectors. Every kernel has a scalar
// reference and, on x86-64, an AVX2 variant selected at runtime. Both use the
// same operation order with no fused multiply-add, so results are bitwise
// identical (tests/unit/test_kernels.cpp enforces this).
//
// All indices here are 0-based; the 1-based public contracts live above.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "inkseg/ink.hpp"

namespace inkseg::kernels {

/// Structure-of-arrays view of a stroke.
struct StrokeSoA {
    std::vector<double> x;
    std::vector<double> y;

    StrokeSoA() = default;
    explicit StrokeSoA(const Stroke& s);
    std::size_t size() const { return x.size(); }
};

/// Direction relation of anchor n with every partner q in [0, N-2]:
///   q > n:  cross(unit(p[q+1]-p[n]), unit(p[q+1]-p[q]))
///   q < n:  the q-anchored value cross(unit(p[n+1]-p[q]), unit(p[n+1]-p[n]))
/// out[n] is set to 0. Requires n <= N-2 and out.size() >= N-1.
using RelationRowFn = void (*)(const double* x, const double* y, std::size_t count,
                               std::size_t n, double* out);

/// out[q] = |p[n] - p[q]| for q in [0, N).
using DistanceRowFn = void (*)(const double* x, const double* y, std::size_t count,
                               std::size_t n, double* out);

/// out[l] = dot(unit(p[l]-p[l-m]), unit(p[l+m]-p[l])) for l in [m, N-1-m];
/// other entries untouched.
using ChordCosineFn = void (*)(const double* x, const double* y, std::size_t count,
                               std::size_t m, double* out);

struct KernelTable {
    std::string_view name;
    RelationRowFn relation_row;
    DistanceRowFn distance_row;
    ChordCosineFn chord_cosines;
};

const KernelTable& scalar_table();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// Picks AVX2 when available unless INKSEG_FORCE_SCALAR is set in the environment.
const KernelTable& active();

// Convenience wrappers over active().
void relation_row(const StrokeSoA& s, std::size_t n, std::span<double> out);
void distance_row(const StrokeSoA& s, std::size_t n, std::span<double> out);
void chord_cosines(const StrokeSoA& s, std::size_t m, std::span<double> out);

namespace scalar {
void relation_row(const double* x, const double* y, std::size_t count, std::size_t n,
                  double* out);
void distance_row(const double* x, const double* y, std::size_t count, std::size_t n,
                  double* out);
void chord_cosines(const double* x, const double* y, std::size_t count, std::size_t m,
                   double* out);
}  // namespace scalar

}  // namespace inkseg::kernels
