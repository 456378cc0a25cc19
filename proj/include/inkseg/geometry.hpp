#pragma once

// Direction kernels shared by every detector. Stroke indices are 1-based and
// all angles are in degrees.

#include <cstddef>
#include <vector>

#include "inkseg/ink.hpp"

namespace inkseg {

struct UnitVec {
    double dx = 1.0;
    double dy = 0.0;
};

/// Unit vector from p_n to p_{n+1} for 1 <= n <= N-1. For n == N this is the
/// loop-closure direction from p_N back to p_1.
UnitVec direction(const Stroke& s, std::size_t n);

/// 2D cross product v1 x v2: negative for a clockwise turn, positive for
/// counter-clockwise, zero when straight.
inline double direction_property(UnitVec v1, UnitVec v2) { return v1.dx * v2.dy - v1.dy * v2.dx; }

/// Angle between two unit vectors in [0, 180] degrees.
double direction_change(UnitVec v1, UnitVec v2);

/// Unit vector from p_n to p_q.
UnitVec point_direction(const Stroke& s, std::size_t n, std::size_t q);

/// Direction relation g_{n,q}: for n < q the cross product of the chord
/// p_n->p_{q+1} with the step p_q->p_{q+1}; for n > q the value g_{q,n}.
double direction_relation(const Stroke& s, std::size_t n, std::size_t q);

/// Angle between the chords p_{n-m}->p_n and p_n->p_{n+m}; requires
/// m+1 <= n <= N-m.
double modified_direction_change(const Stroke& s, std::size_t n, std::size_t m);

/// Every point's modified direction change, 0 outside the valid band.
/// Element n-1 holds the value at point n.
std::vector<double> modified_direction_changes(const Stroke& s, std::size_t m);

/// Sum of modified direction changes over [n, q]; points outside the valid
/// band contribute 0.
double total_modified_direction_change(const Stroke& s, std::size_t n, std::size_t q,
                                       std::size_t m);

/// Each chord turn spans m steps, so the sum above counts the stroke's
/// turning about m times. This divides it back out to give an estimate of the
/// actual turning over [n, q], in degrees. The loop detector and the loop
/// features use this estimate.
double mdc_turning_estimate(const Stroke& s, std::size_t n, std::size_t q, std::size_t m);

double point_distance(const Stroke& s, std::size_t n, std::size_t q);

/// f^d at every interior point: element n-1 holds f^d(v_{n-1}, v_n) for
/// 2 <= n <= N-1, endpoints hold 0.
std::vector<double> turning_properties(const Stroke& s);

/// Total direction change of a stroke treated as closed: interior angles plus
/// the two closure angles at p_N and p_1.
double closed_total_direction_change(const Stroke& s);

}  // namespace inkseg
