#pragma once

// Exact segmentation of noise-free strokes. Every sub-unit of an ideal stroke
// satisfies one of the homogeneity properties exactly (uniform sign of f^d, or
// closure + full turn for loops), so segmentation points fall where that sign
// changes or where a loop closes.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "inkseg/ink.hpp"

namespace inkseg {

/// |f^d| at or below this counts as an exact zero on constructed geometry.
inline constexpr double kIdealZero = 1e-9;

/// Sign of f^d with the ideal-zero tolerance: -1, 0 or +1.
int ideal_sign(double fd);

/// Structural label of a stroke that is a single sub-unit. Throws InkError
/// ("not a single sub-unit stroke") when the sign of f^d changes.
Label classify_single_subunit(const Stroke& s, double delta);

/// Closed loop test: end gap equal to delta (within 1e-6 relative) and 360 degrees of turning
/// including the closure.
bool is_ideal_loop(const Stroke& s, double delta);

/// Segmentation points pi (1-based, strictly increasing, first 1, last N).
/// Interior points come from sign changes of f^d and from loop closures.
std::vector<std::size_t> find_ideal_segmentation_points(const Stroke& s, double delta);

/// Sub-unit m covers [pi_m, pi_{m+1} - 1]; the last one also takes pi_last.
std::vector<SubUnit> extract_ideal_subunits(const Stroke& s, double delta,
                                            std::size_t stroke_index = 1);

/// Upper bound on the number of ways to write a character with n sub-units:
/// 2^n directions times n! orders. Throws for n > 16 (overflows 64 bits).
std::uint64_t generation_count(int n_subunits);

}  // namespace inkseg
