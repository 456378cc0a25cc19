#include "inkseg/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace inkseg {

void PreprocessParams::check() const {
    if (!(delta > 0.0)) throw InkError("delta must be positive");
    if (smooth_window < 1 || smooth_window % 2 == 0) {
        throw InkError("smooth_window must be odd and >= 1");
    }
    if (smooth_passes < 0) throw InkError("smooth_passes must be >= 0");
}

namespace {

// Dedup that also records, for every input point, the output slot it collapsed into.
Stroke dedup_tracked(const Stroke& s, std::vector<std::size_t>* map) {
    Stroke out;
    out.points.reserve(s.size());
    if (map) map->clear();
    for (const Point& p : s.points) {
        if (out.points.empty() || !(out.points.back() == p)) out.points.push_back(p);
        if (map) map->push_back(out.points.size() - 1);
    }
    return out;
}

// Nearest output index for each input vertex, from the output's source parameters.
std::vector<std::size_t> vertex_map(const std::vector<double>& source_param,
                                    std::size_t input_size) {
    std::vector<std::size_t> map(input_size);
    for (std::size_t k = 0; k < input_size; ++k) {
        const double t = static_cast<double>(k);
        auto it = std::lower_bound(source_param.begin(), source_param.end(), t);
        std::size_t hi = static_cast<std::size_t>(it - source_param.begin());
        if (hi >= source_param.size()) {
            map[k] = source_param.size() - 1;
        } else if (hi == 0) {
            map[k] = 0;
        } else {
            map[k] = (t - source_param[hi - 1] <= source_param[hi] - t) ? hi - 1 : hi;
        }
    }
    return map;
}

void compose(std::vector<std::size_t>& map, const std::vector<std::size_t>& next) {
    for (auto& m : map) m = next[m];
}

struct Box {
    double min_x, min_y, max_x, max_y;
};

Box bounds(const Character& c) {
    Box b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& s : c.strokes)
        for (const auto& p : s.points) {
            b.min_x = std::min(b.min_x, p.x);
            b.min_y = std::min(b.min_y, p.y);
            b.max_x = std::max(b.max_x, p.x);
            b.max_y = std::max(b.max_y, p.y);
        }
    return b;
}

}  // namespace

Stroke remove_repeated_points(const Stroke& s) { return dedup_tracked(s, nullptr); }

Character normalize_character(const Character& c, NormalizeMode mode) {
    const Box b = bounds(c);
    const double w = b.max_x - b.min_x;
    const double h = b.max_y - b.min_y;
    if (!(std::max(w, h) > 0.0)) throw InkError("degenerate character");

    double sx, sy;
    if (mode == NormalizeMode::Uniform) {
        sx = sy = 1.0 / std::max(w, h);
    } else {
        sx = w > 0.0 ? 1.0 / w : 0.0;
        sy = h > 0.0 ? 1.0 / h : 0.0;
    }
    Character out = c;
    for (auto& s : out.strokes)
        for (auto& p : s.points) {
            p.x = std::clamp((p.x - b.min_x) * sx, 0.0, 1.0);
            p.y = std::clamp((p.y - b.min_y) * sy, 0.0, 1.0);
        }
    return out;
}

ResampleResult resample_tracked(const Stroke& s, double delta) {
    if (!(delta > 0.0)) throw InkError("resample: delta must be positive");
    ResampleResult r;
    if (s.size() < 2) {
        r.stroke = s;
        r.source_param.assign(s.size(), 0.0);
        return r;
    }
    const auto& pts = s.points;
    const double d2 = delta * delta;

    Point cur = pts[0];
    r.stroke.points.push_back(cur);
    r.source_param.push_back(0.0);

    std::size_t seg = 0;  // current segment pts[seg] -> pts[seg+1]
    double u0 = 0.0;      // position of the walk within that segment
    while (seg + 1 < pts.size()) {
        const Point a = pts[seg];
        const Point b = pts[seg + 1];
        const Point start = a + u0 * (b - a);
        const Point eb = b - cur;
        if (eb.x * eb.x + eb.y * eb.y < d2) {
            ++seg;
            u0 = 0.0;
            continue;
        }
        // |start + t (b - start) - cur|^2 = delta^2; start is inside the circle,
        // b is on or outside it, so the larger root lies in [0,1].
        const Point dir = b - start;
        const Point off = start - cur;
        const double qa = dir.x * dir.x + dir.y * dir.y;
        const double qb = 2.0 * (dir.x * off.x + dir.y * off.y);
        const double qc = off.x * off.x + off.y * off.y - d2;
        const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
        const double t = std::clamp((-qb + std::sqrt(disc)) / (2.0 * qa), 0.0, 1.0);
        cur = start + t * dir;
        u0 = u0 + t * (1.0 - u0);
        r.stroke.points.push_back(cur);
        r.source_param.push_back(static_cast<double>(seg) + u0);
        if (u0 >= 1.0) {
            ++seg;
            u0 = 0.0;
        }
    }
    const Point last = pts.back();
    const Point gap = last - cur;
    if (std::sqrt(gap.x * gap.x + gap.y * gap.y) > 1e-9 * delta) {
        r.stroke.points.push_back(last);
        r.source_param.push_back(static_cast<double>(pts.size() - 1));
    }
    return r;
}

Stroke resample(const Stroke& s, double delta) { return resample_tracked(s, delta).stroke; }

Stroke smooth(const Stroke& s, const PreprocessParams& params) {
    params.check();
    Stroke cur = s;
    const std::size_t n = s.size();
    const std::size_t half = static_cast<std::size_t>(params.smooth_window / 2);
    for (int pass = 0; pass < params.smooth_passes && n > 2 && half > 0; ++pass) {
        Stroke next = cur;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const std::size_t h = std::min({half, i, n - 1 - i});
            double sx = 0.0, sy = 0.0;
            for (std::size_t k = i - h; k <= i + h; ++k) {
                sx += cur.points[k].x;
                sy += cur.points[k].y;
            }
            const double w = static_cast<double>(2 * h + 1);
            next.points[i] = {sx / w, sy / w};
        }
        cur = std::move(next);
    }
    return cur;
}

TrackedCharacter preprocess_character_tracked(const Character& c, const PreprocessParams& params) {
    params.check();
    TrackedCharacter out;
    Character work = c;
    out.index_map.resize(c.strokes.size());

    for (std::size_t i = 0; i < work.strokes.size(); ++i) {
        if (work.strokes[i].empty()) {
            throw InkError("empty stroke " + std::to_string(i + 1));
        }
        work.strokes[i] = dedup_tracked(work.strokes[i], &out.index_map[i]);
    }
    work = normalize_character(work, params.normalize);

    for (std::size_t i = 0; i < work.strokes.size(); ++i) {
        Stroke& s = work.strokes[i];
        auto& map = out.index_map[i];
        if (s.size() < 2) continue;

        auto first = resample_tracked(s, params.delta);
        compose(map, vertex_map(first.source_param, s.size()));
        Stroke smoothed = smooth(first.stroke, params);

        auto second = resample_tracked(smoothed, params.delta);
        compose(map, vertex_map(second.source_param, smoothed.size()));
        s = std::move(second.stroke);
    }

    work = normalize_character(work, params.normalize);
    for (std::size_t i = 0; i < work.strokes.size(); ++i) {
        std::vector<std::size_t> m;
        work.strokes[i] = dedup_tracked(work.strokes[i], &m);
        compose(out.index_map[i], m);
        for (auto& v : out.index_map[i]) v += 1;
    }
    out.character = std::move(work);
    return out;
}

Character preprocess_character(const Character& c, const PreprocessParams& params) {
    return preprocess_character_tracked(c, params).character;
}

}  // namespace inkseg
