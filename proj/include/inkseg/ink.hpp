#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inkseg {

/// Raised for malformed input and violated preconditions.
class InkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

/// Pen-down to pen-up point sequence. Never empty once validated.
struct Stroke {
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    /// 1-based access, matching the index convention of every public contract.
    const Point& at1(std::size_t n) const { return points.at(n - 1); }

    friend bool operator==(const Stroke&, const Stroke&) = default;
};

struct Character {
    std::vector<Stroke> strokes;  // writing order
    std::optional<int> label;
    std::string meta_json = "{}";  // compact JSON object, opaque to the library

    std::size_t point_count() const;

    friend bool operator==(const Character&, const Character&) = default;
};

enum class Label { CW, CCW, Straight, Loop, PointStroke, Unlabeled };

std::string_view to_string(Label l);
Label label_from_string(std::string_view s);

/// Inclusive 1-based index range within one stroke.
struct IndexRange {
    std::size_t start = 1;
    std::size_t end = 1;

    std::size_t length() const { return end - start + 1; }
    bool contains(std::size_t n) const { return start <= n && n <= end; }
    bool contains(const IndexRange& o) const { return start <= o.start && o.end <= end; }
    bool overlaps(const IndexRange& o) const { return start <= o.end && o.start <= end; }

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct SubUnit {
    std::size_t stroke_index = 1;  // 1-based
    IndexRange range;
    Label label = Label::Unlabeled;

    friend bool operator==(const SubUnit&, const SubUnit&) = default;
};

struct Diagnostic {
    std::size_t stroke = 0;  // 1-based, 0 for character-level
    std::size_t point = 0;   // 1-based, 0 for stroke-level
    std::string rule;

    std::string to_string() const;
};

/// Checks the post-preprocessing invariants: non-empty strokes, finite
/// coordinates inside the unit box, no repeated consecutive points.
std::vector<Diagnostic> validate(const Character& c);

/// Returns the stroke with x negated. Used by the mirror-law checks.
Stroke mirror_x(const Stroke& s);
Stroke reversed(const Stroke& s);

}  // namespace inkseg
