#include "inkseg/features.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <map>
#include <numbers>

#include "inkseg/geometry.hpp"

namespace inkseg {

namespace {

double segment_length(Point a, Point b) { return std::hypot(b.x - a.x, b.y - a.y); }

double path_length(const Stroke& s, std::size_t first, std::size_t last) {
    double len = 0.0;
    for (std::size_t n = first; n < last; ++n) len += segment_length(s.at1(n), s.at1(n + 1));
    return len;
}

std::size_t label_slot(Label l) {
    switch (l) {
        case Label::CW: return 0;
        case Label::CCW: return 1;
        case Label::Straight: return 2;
        case Label::Loop: return 3;
        case Label::PointStroke: return 4;
        case Label::Unlabeled: break;
    }
    return 5;
}

}  // namespace

FeatureVector global_features(const Character& c) {
    std::vector<Point> pts;
    std::vector<double> arc;  // cumulative pen-down length at each point
    double total = 0.0;
    for (const Stroke& s : c.strokes) {
        for (std::size_t n = 0; n < s.size(); ++n) {
            if (n > 0) total += segment_length(s.points[n - 1], s.points[n]);
            pts.push_back(s.points[n]);
            arc.push_back(total);
        }
    }
    if (pts.empty()) throw InkError("global_features: empty character");

    FeatureVector f{std::string(kGlobalSchema), std::vector<double>(2 * kGlobalSamples)};
    for (std::size_t k = 0; k < kGlobalSamples; ++k) {
        const double u = static_cast<double>(k) / static_cast<double>(kGlobalSamples - 1);
        Point p;
        if (total > 0.0) {
            const double target = u * total;
            // First point at or past the target; interpolate back to its predecessor.
            const auto it = std::lower_bound(arc.begin(), arc.end(), target);
            std::size_t j = it == arc.end() ? pts.size() - 1 : static_cast<std::size_t>(it - arc.begin());
            if (j == 0 || arc[j] == arc[j - 1]) {
                p = pts[j];
            } else {
                const double t = (target - arc[j - 1]) / (arc[j] - arc[j - 1]);
                p = pts[j - 1] + t * (pts[j] - pts[j - 1]);
            }
        } else {
            p = pts[static_cast<std::size_t>(std::lround(u * static_cast<double>(pts.size() - 1)))];
        }
        f.values[k] = p.x;
        f.values[kGlobalSamples + k] = p.y;
    }
    return f;
}

FeatureVector local_features(const std::vector<SegmentationResult>& r, const Character& c,
                             const Config& cfg) {
    if (r.size() != c.strokes.size()) throw InkError("local_features: segmentation does not match character");
    const std::size_t m = static_cast<std::size_t>(cfg.tau_mdc);
    double total = 0.0;
    for (const Stroke& s : c.strokes) total += path_length(s, 1, s.size());

    FeatureVector f{std::string(kLocalSchema), std::vector<double>(kLocalSlots * kLocalSlotWidth, 0.0)};
    std::size_t slot = 0;
    for (std::size_t i = 0; i < r.size() && slot < kLocalSlots; ++i) {
        const Stroke& s = c.strokes[i];
        const std::vector<double> theta = modified_direction_changes(s, m);
        for (const SubUnit& u : r[i].subunits) {
            if (slot == kLocalSlots) break;
            double* v = f.values.data() + slot * kLocalSlotWidth;
            const std::size_t hot = label_slot(u.label);
            if (hot < 5) v[hot] = 1.0;

            const std::size_t a = u.range.start, b = u.range.end;
            v[5] = total > 0.0 ? path_length(s, a, b) / total : 0.0;
            double cx = 0.0, cy = 0.0, turning = 0.0;
            for (std::size_t n = a; n <= b; ++n) {
                cx += s.at1(n).x;
                cy += s.at1(n).y;
                turning += theta[n - 1];
            }
            v[6] = cx / static_cast<double>(u.range.length());
            v[7] = cy / static_cast<double>(u.range.length());
            const Point d = s.at1(b) - s.at1(a);
            if (d.x != 0.0 || d.y != 0.0) v[8] = std::atan2(d.y, d.x) / std::numbers::pi;
            // Loops sit near 1; the chord sum counts each turn m times.
            v[9] = turning / (static_cast<double>(m) * 360.0);
            ++slot;
        }
    }
    return f;
}

FeatureVector local_global_features(const std::vector<SegmentationResult>& r, const Character& c,
                                    const Config& cfg) {
    FeatureVector f = local_features(r, c, cfg);
    const FeatureVector g = global_features(c);
    f.schema = std::string(kLocalGlobalSchema);
    f.values.insert(f.values.end(), g.values.begin(), g.values.end());
    return f;
}

CentroidModel train_centroid(const std::vector<LabeledFeatures>& data) {
    if (data.empty()) throw InkError("train_centroid: no training data");
    const std::size_t dim = data.front().features.values.size();
    CentroidModel m;
    m.schema = data.front().features.schema;
    for (const auto& d : data) {
        if (d.features.schema != m.schema || d.features.values.size() != dim) {
            throw InkError("train_centroid: mixed feature schemas");
        }
    }

    m.mean.assign(dim, 0.0);
    m.scale.assign(dim, 0.0);
    const double count = static_cast<double>(data.size());
    for (const auto& d : data) {
        for (std::size_t k = 0; k < dim; ++k) m.mean[k] += d.features.values[k];
    }
    for (double& v : m.mean) v /= count;
    for (const auto& d : data) {
        for (std::size_t k = 0; k < dim; ++k) {
            const double e = d.features.values[k] - m.mean[k];
            m.scale[k] += e * e;
        }
    }
    for (double& v : m.scale) {
        v = std::sqrt(v / count);
        if (!(v > 0.0)) v = 1.0;
    }

    std::map<int, std::pair<std::vector<double>, std::size_t>> sums;
    for (const auto& d : data) {
        auto& [sum, n] = sums[d.label];
        sum.resize(dim, 0.0);
        for (std::size_t k = 0; k < dim; ++k) sum[k] += (d.features.values[k] - m.mean[k]) / m.scale[k];
        ++n;
    }
    for (auto& [label, acc] : sums) {
        m.classes.push_back(label);
        for (double& v : acc.first) v /= static_cast<double>(acc.second);
        m.centroids.push_back(std::move(acc.first));
    }
    return m;
}

Classification classify(const CentroidModel& m, const FeatureVector& f) {
    if (f.schema != m.schema || f.values.size() != m.mean.size()) {
        throw InkError("classify: feature schema does not match the model");
    }
    if (m.classes.empty()) throw InkError("classify: model has no classes");
    std::vector<double> z(f.values.size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = (f.values[k] - m.mean[k]) / m.scale[k];

    Classification out;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < m.classes.size(); ++c) {
        double d2 = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            const double e = z[k] - m.centroids[c][k];
            d2 += e * e;
        }
        const double d = std::sqrt(d2);
        out.scores.push_back(-d);
        // Classes are ascending, so strict comparison keeps the lowest id on ties.
        if (d < best) {
            best = d;
            out.label = m.classes[c];
        }
    }
    return out;
}

std::string model_to_json(const CentroidModel& m) {
    nlohmann::ordered_json j;
    j["schema"] = m.schema;
    j["classes"] = m.classes;
    j["centroids"] = m.centroids;
    j["mean"] = m.mean;
    j["scale"] = m.scale;
    return j.dump() + "\n";
}

CentroidModel parse_model(std::string_view text) {
    CentroidModel m;
    try {
        const auto j = nlohmann::json::parse(text);
        m.schema = j.at("schema").get<std::string>();
        m.classes = j.at("classes").get<std::vector<int>>();
        m.centroids = j.at("centroids").get<std::vector<std::vector<double>>>();
        m.mean = j.at("mean").get<std::vector<double>>();
        m.scale = j.at("scale").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw InkError(std::string("model: ") + e.what());
    }
    if (m.centroids.size() != m.classes.size() || m.scale.size() != m.mean.size() ||
        !std::is_sorted(m.classes.begin(), m.classes.end())) {
        throw InkError("model: inconsistent shapes");
    }
    for (const auto& c : m.centroids) {
        if (c.size() != m.mean.size()) throw InkError("model: inconsistent shapes");
    }
    return m;
}

}  // namespace inkseg
