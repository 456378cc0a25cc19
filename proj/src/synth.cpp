#include "inkseg/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numbers>

#include "inkseg/geometry.hpp"
#include "inkseg/ideal.hpp"
#include "inkseg/rng.hpp"

namespace inkseg {

using nlohmann::ordered_json;

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kJoinTolerance = 1e-9;
constexpr std::size_t kMinPrimitivePoints = 5;

Point polar(Point c, double r, double deg) {
    return {c.x + r * std::cos(deg * kDegToRad), c.y + r * std::sin(deg * kDegToRad)};
}

int loop_vertex_count(double radius, double delta) {
    return std::max(6, static_cast<int>(std::lround(2.0 * std::numbers::pi * radius / delta)));
}

// Circumradius of the regular polygon whose side is delta.
double loop_radius(int vertices, double delta) {
    return delta / (2.0 * std::sin(std::numbers::pi / vertices));
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

int label_sign(Label l) {
    switch (l) {
        case Label::CW: return -1;
        case Label::CCW: return 1;
        default: return 0;
    }
}

}  // namespace

Label PrimitiveSpec::label() const {
    switch (kind) {
        case PrimitiveKind::Line: return Label::Straight;
        case PrimitiveKind::Arc: {
            const bool left = (sweep_deg > 0.0) != reversed;
            return left ? Label::CCW : Label::CW;
        }
        case PrimitiveKind::Loop: return Label::Loop;
        case PrimitiveKind::Point: return Label::PointStroke;
    }
    return Label::Unlabeled;
}

PrimitiveSpec make_line(Point from, Point to) {
    PrimitiveSpec p;
    p.kind = PrimitiveKind::Line;
    p.from = from;
    p.to = to;
    return p;
}

PrimitiveSpec make_arc(Point center, double radius, double start_deg, double sweep_deg) {
    PrimitiveSpec p;
    p.kind = PrimitiveKind::Arc;
    p.center = center;
    p.radius = radius;
    p.start_deg = start_deg;
    p.sweep_deg = sweep_deg;
    return p;
}

PrimitiveSpec make_loop(Point center, double radius, double start_deg, bool ccw) {
    PrimitiveSpec p;
    p.kind = PrimitiveKind::Loop;
    p.center = center;
    p.radius = radius;
    p.start_deg = start_deg;
    p.ccw = ccw;
    return p;
}

PrimitiveSpec make_point(Point at) {
    PrimitiveSpec p;
    p.kind = PrimitiveKind::Point;
    p.at = at;
    return p;
}

Stroke gen_primitive(const PrimitiveSpec& spec, double delta) {
    if (!(delta > 0.0)) throw InkError("gen_primitive: delta must be > 0");
    Stroke s;
    switch (spec.kind) {
        case PrimitiveKind::Point:
            s.points.push_back(spec.at);
            break;
        case PrimitiveKind::Line: {
            const double len = distance(spec.from, spec.to);
            if (!(len > 0.0)) throw InkError("gen_primitive: zero-length line");
            const long steps = std::max(1L, std::lround(len / delta));
            const Point d = spec.to - spec.from;
            for (long k = 0; k < steps; ++k) {
                const double t = static_cast<double>(k) / static_cast<double>(steps);
                s.points.push_back(spec.from + t * d);
            }
            s.points.push_back(spec.to);
            break;
        }
        case PrimitiveKind::Arc: {
            if (!(spec.radius > 0.0) || spec.sweep_deg == 0.0) {
                throw InkError("gen_primitive: arc needs radius > 0 and a non-zero sweep");
            }
            const double length = std::abs(spec.sweep_deg) * kDegToRad * spec.radius;
            const long steps = std::max(2L, std::lround(length / delta));
            for (long k = 0; k <= steps; ++k) {
                const double t = static_cast<double>(k) / static_cast<double>(steps);
                s.points.push_back(polar(spec.center, spec.radius, spec.start_deg + spec.sweep_deg * t));
            }
            break;
        }
        case PrimitiveKind::Loop: {
            if (!(spec.radius > 0.0)) throw InkError("gen_primitive: loop needs radius > 0");
            const int m = loop_vertex_count(spec.radius, delta);
            const double r = loop_radius(m, delta);
            const double dir = spec.ccw ? 1.0 : -1.0;
            for (int k = 0; k < m; ++k) {
                s.points.push_back(polar(spec.center, r, spec.start_deg + dir * 360.0 * k / m));
            }
            break;
        }
    }
    if (spec.reversed) std::reverse(s.points.begin(), s.points.end());
    return s;
}

// --- StrokeBuilder -----------------------------------------------------------

StrokeBuilder::StrokeBuilder(Point start, double heading_deg, double delta)
    : pos_(start), heading_(heading_deg), delta_(delta) {}

StrokeBuilder& StrokeBuilder::line(double length) {
    const Point to = polar(pos_, length, heading_);
    specs_.push_back(make_line(pos_, to));
    pos_ = to;
    return *this;
}

StrokeBuilder& StrokeBuilder::arc(double radius, double sweep_deg) {
    const double side = sweep_deg > 0.0 ? 90.0 : -90.0;
    const Point center = polar(pos_, radius, heading_ + side);
    const double start = heading_ - side;
    PrimitiveSpec spec = make_arc(center, radius, start, sweep_deg);
    specs_.push_back(spec);
    pos_ = gen_primitive(spec, delta_).points.back();
    heading_ += sweep_deg;
    return *this;
}

StrokeBuilder& StrokeBuilder::loop(double radius, bool ccw) {
    const double r = loop_radius(loop_vertex_count(radius, delta_), delta_);
    const double side = ccw ? 90.0 : -90.0;
    const Point center = polar(pos_, r, heading_ + side);
    PrimitiveSpec spec = make_loop(center, r, heading_ - side, ccw);
    const Stroke pts = gen_primitive(spec, delta_);
    specs_.push_back(spec);
    const Point last = pts.points.back();
    const Point first = pts.points.front();
    pos_ = last;
    heading_ = std::atan2(first.y - last.y, first.x - last.x) / kDegToRad;
    return *this;
}

StrokeBuilder& StrokeBuilder::turn(double deg) {
    heading_ += deg;
    return *this;
}

// --- composition -------------------------------------------------------------

std::size_t GroundTruth::subunit_count() const {
    std::size_t n = 0;
    for (const auto& s : strokes) n += s.labels.size();
    return n;
}

Composed compose_character(const CharacterSpec& spec, double delta) {
    if (spec.empty()) throw InkError("compose_character: no strokes");
    Composed out;
    for (const auto& prims : spec) {
        if (prims.empty()) throw InkError("compose_character: empty stroke spec");
        Stroke stroke;
        StrokeTruth truth;

        if (prims.front().kind == PrimitiveKind::Point) {
            if (prims.size() != 1) throw InkError("compose_character: point primitive must be alone");
            stroke = gen_primitive(prims.front(), delta);
            truth.pi = {1};
            truth.labels = {Label::PointStroke};
            truth.primitives = {{1, 1}};
            out.character.strokes.push_back(std::move(stroke));
            out.truth.strokes.push_back(std::move(truth));
            continue;
        }

        for (std::size_t i = 0; i < prims.size(); ++i) {
            const PrimitiveSpec& p = prims[i];
            if (p.kind == PrimitiveKind::Point) {
                throw InkError("compose_character: point primitive must be alone");
            }
            const Stroke g = gen_primitive(p, delta);
            if (g.size() < kMinPrimitivePoints) throw InkError("compose_character: primitive too short");
            if (i == 0) {
                stroke = g;
                truth.primitives.push_back({1, g.size()});
            } else {
                if (distance(g.points.front(), stroke.points.back()) > kJoinTolerance) {
                    throw InkError("compose_character: disconnected primitives");
                }
                if (p.kind == PrimitiveKind::Loop && prims[i - 1].kind == PrimitiveKind::Loop) {
                    throw InkError("compose_character: adjacent loops");
                }
                const std::size_t k = stroke.size();
                stroke.points.insert(stroke.points.end(), g.points.begin() + 1, g.points.end());
                truth.primitives.push_back({k, stroke.size()});
            }
            truth.labels.push_back(p.label());
        }

        // Boundary of every junction, from the turn at the shared point.
        truth.pi.push_back(1);
        for (std::size_t i = 1; i < prims.size(); ++i) {
            const std::size_t k = truth.primitives[i].start;
            const Label prev = truth.labels[i - 1], next = truth.labels[i];
            std::size_t b;
            if (prev == Label::Loop) {
                b = k + 1;
            } else if (next == Label::Loop) {
                b = k;
            } else {
                const int turn = ideal_sign(direction_property(direction(stroke, k - 1), direction(stroke, k)));
                const int sp = label_sign(prev), sn = label_sign(next);
                if (sp == sn && turn == sp) {
                    throw InkError("compose_character: junction turns like both neighbours");
                }
                b = (turn != sn && turn == sp) ? k + 1 : k;
            }
            truth.pi.push_back(b);
        }
        truth.pi.push_back(stroke.size());
        for (std::size_t i = 1; i < truth.pi.size(); ++i) {
            if (truth.pi[i] <= truth.pi[i - 1]) throw InkError("compose_character: overlapping boundaries");
        }
        out.character.strokes.push_back(std::move(stroke));
        out.truth.strokes.push_back(std::move(truth));
    }
    return out;
}

// --- perturbation ------------------------------------------------------------

namespace {

std::vector<double> jitter_sequence(Rng& rng, std::size_t n, double sigma, double corr) {
    std::vector<double> out(n);
    if (corr <= 0.0) {
        for (double& v : out) v = sigma * rng.normal();
        return out;
    }
    const int reach = static_cast<int>(std::ceil(3.0 * corr));
    std::vector<double> kernel(2 * reach + 1);
    double norm = 0.0;
    for (int k = -reach; k <= reach; ++k) {
        const double h = std::exp(-0.5 * k * k / (corr * corr));
        kernel[k + reach] = h;
        norm += h * h;
    }
    norm = std::sqrt(norm);
    std::vector<double> white(n + 2 * reach);
    for (double& w : white) w = rng.normal();
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k = 0; k <= 2 * reach; ++k) acc += kernel[k] * white[j + k];
        out[j] = sigma * acc / norm;
    }
    return out;
}

}  // namespace

Character perturb(const Character& c, const GroundTruth& truth, const NoiseParams& noise) {
    if (noise.jitter_sigma < 0.0 || noise.bow < 0.0 || noise.warp < 0.0 || noise.jitter_corr < 0.0 ||
        noise.elastic < 0.0) {
        throw InkError("perturb: noise parameters must be >= 0");
    }
    if (truth.strokes.size() != c.strokes.size()) throw InkError("perturb: truth does not match character");
    Rng rng(derive_seed(noise.seed, 0));
    Character out = c;

    if (noise.bow > 0.0) {
        for (std::size_t i = 0; i < out.strokes.size(); ++i) {
            auto& pts = out.strokes[i].points;
            const StrokeTruth& t = truth.strokes[i];
            for (std::size_t p = 0; p < t.primitives.size(); ++p) {
                if (t.labels[p] != Label::Straight) continue;
                const IndexRange r = t.primitives[p];
                const double amp = noise.bow * rng.uniform(-1.0, 1.0);
                const Point a = pts[r.start - 1], b = pts[r.end - 1];
                const double len = distance(a, b);
                if (r.length() < 3 || !(len > 0.0)) continue;
                const Point normal{-(b.y - a.y) / len, (b.x - a.x) / len};
                for (std::size_t n = r.start + 1; n < r.end; ++n) {
                    const double t01 = static_cast<double>(n - r.start) / static_cast<double>(r.end - r.start);
                    pts[n - 1] = pts[n - 1] + (amp * std::sin(std::numbers::pi * t01)) * normal;
                }
            }
        }
    }

    if (noise.warp > 0.0) {
        const double rot = noise.warp * rng.uniform(-1.0, 1.0) * 15.0 * kDegToRad;
        const double shear = noise.warp * rng.uniform(-1.0, 1.0) * 0.25;
        const double sx = 1.0 + noise.warp * rng.uniform(-1.0, 1.0) * 0.15;
        const double sy = 1.0 + noise.warp * rng.uniform(-1.0, 1.0) * 0.15;
        double cx = 0.0, cy = 0.0;
        std::size_t count = 0;
        for (const auto& s : out.strokes) {
            for (const Point& p : s.points) {
                cx += p.x;
                cy += p.y;
                ++count;
            }
        }
        cx /= static_cast<double>(count);
        cy /= static_cast<double>(count);
        const double cr = std::cos(rot), sr = std::sin(rot);
        for (auto& s : out.strokes) {
            for (Point& p : s.points) {
                const double dx = p.x - cx, dy = p.y - cy;
                const double u = sx * (dx + shear * dy), v = sy * dy;
                p = {cx + cr * u - sr * v, cy + sr * u + cr * v};
            }
        }
    }

    if (noise.elastic > 0.0) {
        // Three random plane waves per axis, wavelengths 0.67 to 2 units; the
        // sum is scaled so the largest possible displacement is `elastic`.
        struct Wave {
            double fx, fy, phase, weight;
        };
        auto waves = [&] {
            std::vector<Wave> w(3);
            double total = 0.0;
            for (Wave& v : w) {
                const double f = rng.uniform(0.5, 1.5), dir = rng.uniform(0.0, 2.0 * std::numbers::pi);
                v = {f * std::cos(dir), f * std::sin(dir), rng.uniform(0.0, 2.0 * std::numbers::pi),
                     rng.uniform(0.5, 1.0)};
                total += v.weight;
            }
            for (Wave& v : w) v.weight *= noise.elastic / total;
            return w;
        };
        const std::vector<Wave> wx = waves(), wy = waves();
        auto field = [](const std::vector<Wave>& w, Point p) {
            double acc = 0.0;
            for (const Wave& v : w) acc += v.weight * std::sin(2.0 * std::numbers::pi * (v.fx * p.x + v.fy * p.y) + v.phase);
            return acc;
        };
        for (auto& s : out.strokes) {
            for (Point& p : s.points) p = {p.x + field(wx, p), p.y + field(wy, p)};
        }
    }

    if (noise.jitter_sigma > 0.0) {
        for (auto& s : out.strokes) {
            const auto jx = jitter_sequence(rng, s.size(), noise.jitter_sigma, noise.jitter_corr);
            const auto jy = jitter_sequence(rng, s.size(), noise.jitter_sigma, noise.jitter_corr);
            for (std::size_t n = 0; n < s.size(); ++n) {
                s.points[n].x += jx[n];
                s.points[n].y += jy[n];
            }
        }
    }
    return out;
}

GroundTruth remap_ground_truth(const GroundTruth& truth, const TrackedCharacter& tracked) {
    if (truth.strokes.size() != tracked.index_map.size()) {
        throw InkError("remap_ground_truth: stroke count mismatch");
    }
    GroundTruth out = truth;
    for (std::size_t i = 0; i < out.strokes.size(); ++i) {
        const auto& map = tracked.index_map[i];
        auto at = [&](std::size_t n) {
            if (n < 1 || n > map.size()) throw InkError("remap_ground_truth: index outside the stroke");
            return map[n - 1];
        };
        for (std::size_t& p : out.strokes[i].pi) p = at(p);
        for (IndexRange& r : out.strokes[i].primitives) r = {at(r.start), at(r.end)};
    }
    return out;
}

std::string ground_truth_to_json(const GroundTruth& truth) {
    ordered_json doc;
    doc["strokes"] = ordered_json::array();
    for (const StrokeTruth& s : truth.strokes) {
        ordered_json j;
        j["pi"] = s.pi;
        j["labels"] = ordered_json::array();
        for (Label l : s.labels) j["labels"].push_back(std::string(to_string(l)));
        j["primitives"] = ordered_json::array();
        for (const IndexRange& r : s.primitives) j["primitives"].push_back({r.start, r.end});
        doc["strokes"].push_back(std::move(j));
    }
    return doc.dump() + "\n";
}

GroundTruth parse_ground_truth(std::string_view text) {
    GroundTruth out;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& j : doc.at("strokes")) {
            StrokeTruth s;
            s.pi = j.at("pi").get<std::vector<std::size_t>>();
            for (const auto& l : j.at("labels")) s.labels.push_back(label_from_string(l.get<std::string>()));
            for (const auto& r : j.at("primitives")) s.primitives.push_back({r.at(0).get<std::size_t>(), r.at(1).get<std::size_t>()});
            out.strokes.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InkError(std::string("ground truth: ") + e.what());
    }
    return out;
}

// --- figure characters -------------------------------------------------------

CharacterSpec fig13_spec(double delta) {
    // Two clockwise bowls, a horizontal bar drawn rightwards, a vertical drawn downwards.
    CharacterSpec c;
    c.push_back(StrokeBuilder({0.10, 0.55}, 90.0, delta).arc(0.16, -200.0).specs());
    c.push_back(StrokeBuilder({0.45, 0.55}, 90.0, delta).arc(0.14, -180.0).specs());
    c.push_back(StrokeBuilder({0.05, 0.85}, 0.0, delta).line(0.90).specs());
    c.push_back(StrokeBuilder({0.80, 0.85}, -90.0, delta).line(0.80).specs());
    return c;
}

CharacterSpec fig17_spec(double delta) {
    // Stroke 1: two clockwise arcs meeting at a cusp that turns the other way.
    CharacterSpec c;
    c.push_back(StrokeBuilder({0.10, 0.40}, 80.0, delta).arc(0.15, -160.0).turn(150.0).arc(0.12, -170.0).specs());
    c.push_back(StrokeBuilder({0.05, 0.90}, 0.0, delta).line(0.90).specs());
    c.push_back(StrokeBuilder({0.75, 0.90}, -90.0, delta).line(0.85).specs());
    return c;
}

CharacterSpec fig20_spec(double delta) {
    // One stroke: bar, corner, counter-clockwise bowl, clockwise sweep, loop, tail.
    CharacterSpec c;
    c.push_back(StrokeBuilder({0.05, 0.85}, 0.0, delta)
                    .line(0.30)
                    .turn(-120.0)
                    .arc(0.15, 160.0)
                    .arc(0.12, -150.0)
                    .loop(0.07, false)
                    .turn(45.0)
                    .line(0.30)
                    .specs());
    return c;
}

// --- manifest ----------------------------------------------------------------

namespace {

ordered_json point_json(Point p) { return ordered_json::array({p.x, p.y}); }

Point point_from(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw InkError("manifest: point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json primitive_json(const PrimitiveSpec& p) {
    ordered_json j;
    switch (p.kind) {
        case PrimitiveKind::Line:
            j["kind"] = "line";
            j["from"] = point_json(p.from);
            j["to"] = point_json(p.to);
            break;
        case PrimitiveKind::Arc:
            j["kind"] = "arc";
            j["center"] = point_json(p.center);
            j["radius"] = p.radius;
            j["start_deg"] = p.start_deg;
            j["sweep_deg"] = p.sweep_deg;
            break;
        case PrimitiveKind::Loop:
            j["kind"] = "loop";
            j["center"] = point_json(p.center);
            j["radius"] = p.radius;
            j["start_deg"] = p.start_deg;
            j["orientation"] = p.ccw ? "ccw" : "cw";
            break;
        case PrimitiveKind::Point:
            j["kind"] = "point";
            j["at"] = point_json(p.at);
            break;
    }
    if (p.reversed) j["reversed"] = true;
    return j;
}

PrimitiveSpec primitive_from(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    PrimitiveSpec p;
    if (kind == "line") {
        p = make_line(point_from(j.at("from")), point_from(j.at("to")));
    } else if (kind == "arc") {
        p = make_arc(point_from(j.at("center")), j.at("radius").get<double>(),
                     j.at("start_deg").get<double>(), j.at("sweep_deg").get<double>());
    } else if (kind == "loop") {
        const std::string o = j.at("orientation").get<std::string>();
        if (o != "ccw" && o != "cw") throw InkError("manifest: loop orientation must be ccw or cw");
        p = make_loop(point_from(j.at("center")), j.at("radius").get<double>(),
                      j.at("start_deg").get<double>(), o == "ccw");
    } else if (kind == "point") {
        p = make_point(point_from(j.at("at")));
    } else {
        throw InkError("manifest: unknown primitive kind \"" + kind + "\"");
    }
    if (j.contains("reversed")) p.reversed = j.at("reversed").get<bool>();
    return p;
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
    Manifest m;
    try {
        const auto doc = nlohmann::json::parse(text);
        m.seed = doc.at("seed").get<std::uint64_t>();
        m.delta = doc.at("delta").get<double>();
        m.train_per_class = doc.at("train_per_class").get<int>();
        m.test_per_class = doc.at("test_per_class").get<int>();
        const auto& n = doc.at("noise");
        m.noise.jitter_sigma = n.at("jitter_sigma").get<double>();
        m.noise.bow = n.at("bow").get<double>();
        m.noise.warp = n.value("warp", 0.0);
        m.noise.jitter_corr = n.value("jitter_corr", 0.0);
        m.noise.elastic = n.value("elastic", 0.0);
        for (const auto& cj : doc.at("classes")) {
            ClassSpec c;
            c.id = cj.at("id").get<int>();
            c.name = cj.at("name").get<std::string>();
            for (const auto& sj : cj.at("strokes")) {
                std::vector<PrimitiveSpec> stroke;
                for (const auto& pj : sj) stroke.push_back(primitive_from(pj));
                c.strokes.push_back(std::move(stroke));
            }
            m.classes.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InkError(std::string("manifest: ") + e.what());
    }
    if (!(m.delta > 0.0)) throw InkError("manifest: delta must be > 0");
    if (m.train_per_class < 1 || m.test_per_class < 0) throw InkError("manifest: bad sample counts");
    if (m.classes.empty()) throw InkError("manifest: no classes");
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m.classes[i].id == m.classes[j].id) throw InkError("manifest: duplicate class id");
        }
    }
    return m;
}

std::string manifest_to_json(const Manifest& m) {
    ordered_json doc;
    doc["seed"] = m.seed;
    doc["delta"] = m.delta;
    doc["train_per_class"] = m.train_per_class;
    doc["test_per_class"] = m.test_per_class;
    doc["noise"] = {{"jitter_sigma", m.noise.jitter_sigma},
                    {"bow", m.noise.bow},
                    {"warp", m.noise.warp},
                    {"jitter_corr", m.noise.jitter_corr},
                    {"elastic", m.noise.elastic}};
    doc["classes"] = ordered_json::array();
    for (const ClassSpec& c : m.classes) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["strokes"] = ordered_json::array();
        for (const auto& stroke : c.strokes) {
            ordered_json sj = ordered_json::array();
            for (const auto& p : stroke) sj.push_back(primitive_json(p));
            cj["strokes"].push_back(std::move(sj));
        }
        doc["classes"].push_back(std::move(cj));
    }
    return doc.dump(1) + "\n";
}

Manifest shipped_manifest() {
    const double d = 0.01;
    Manifest m;
    m.seed = 20240611;
    m.delta = d;
    m.train_per_class = 30;
    m.test_per_class = 10;
    m.noise.jitter_sigma = 0.005;
    m.noise.bow = 0.015;
    m.noise.warp = 1.0;
    m.noise.jitter_corr = 8.0;
    m.noise.elastic = 0.04;

    auto add = [&](int id, std::string name, CharacterSpec spec) {
        m.classes.push_back({id, std::move(name), std::move(spec)});
    };
    add(1, "fig13", fig13_spec(d));
    add(2, "fig17", fig17_spec(d));
    add(3, "fig20", fig20_spec(d));
    {
        // fig13 with counter-clockwise bowls.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.42, 0.55}, 90.0, d).arc(0.16, 200.0).specs());
        c.push_back(StrokeBuilder({0.80, 0.55}, 90.0, d).arc(0.14, 180.0).specs());
        c.push_back(StrokeBuilder({0.05, 0.85}, 0.0, d).line(0.90).specs());
        c.push_back(StrokeBuilder({0.80, 0.85}, -90.0, d).line(0.80).specs());
        add(4, "fig13-ccw", std::move(c));
    }
    {
        // fig20 without the loop.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.05, 0.85}, 0.0, d)
                        .line(0.30).turn(-120.0).arc(0.15, 160.0).arc(0.12, -150.0)
                        .turn(60.0).line(0.35).specs());
        add(5, "fig20-noloop", std::move(c));
    }
    {
        // fig17 with an S-shaped first stroke and one bar.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.15, 0.30}, 80.0, d).arc(0.15, -160.0).arc(0.12, 170.0).specs());
        c.push_back(StrokeBuilder({0.05, 0.90}, 0.0, d).line(0.90).specs());
        add(6, "fig17-s", std::move(c));
    }
    {
        // Clockwise bowl running into a counter-clockwise loop, then a long tail; a head bar.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.20, 0.45}, 90.0, d)
                        .arc(0.16, -150.0).loop(0.09, true).turn(-45.0).line(0.45).specs());
        c.push_back(StrokeBuilder({0.05, 0.95}, 0.0, d).line(0.90).specs());
        add(7, "bowl-loop", std::move(c));
    }
    {
        // Bar, sharp corner, counter-clockwise hook; a second bar and a dot.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.15, 0.80}, 0.0, d).line(0.45).turn(-130.0).arc(0.20, 160.0).specs());
        c.push_back(StrokeBuilder({0.05, 0.95}, 0.0, d).line(0.80).specs());
        c.push_back({make_point({0.92, 0.95})});
        add(8, "hook-dot", std::move(c));
    }
    {
        // Stem drawn down, corner, clockwise hook; plus a head bar.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.60, 0.95}, -90.0, d).line(0.50).turn(120.0).arc(0.18, -200.0).specs());
        c.push_back(StrokeBuilder({0.20, 0.95}, 0.0, d).line(0.70).specs());
        add(9, "stem-hook", std::move(c));
    }
    {
        // fig20 with a counter-clockwise loop after the clockwise sweep.
        CharacterSpec c;
        c.push_back(StrokeBuilder({0.05, 0.85}, 0.0, d)
                        .line(0.35).turn(-120.0).arc(0.15, 160.0).arc(0.13, -120.0)
                        .loop(0.08, true).turn(-45.0).line(0.35).specs());
        add(10, "fig20-ccwloop", std::move(c));
    }
    return m;
}

std::string Sample::file_stem() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "c%02d_%s_%03d", class_id, split.c_str(), index);
    return buf;
}

std::vector<Sample> generate_corpus(const Manifest& m) {
    std::vector<Sample> out;
    for (const std::string split : {"train", "test"}) {
        const int count = split == "train" ? m.train_per_class : m.test_per_class;
        const std::uint64_t split_bit = split == "train" ? 0 : 1;
        for (const ClassSpec& c : m.classes) {
            const Composed ideal = compose_character(c.strokes, m.delta);
            for (int i = 0; i < count; ++i) {
                Sample s;
                s.split = split;
                s.class_id = c.id;
                s.index = i;
                NoiseParams noise = m.noise;
                const std::uint64_t stream = (static_cast<std::uint64_t>(c.id) << 24) |
                                             (split_bit << 20) | static_cast<std::uint64_t>(i);
                noise.seed = derive_seed(m.seed, stream);
                s.ink = perturb(ideal.character, ideal.truth, noise);
                s.ink.label = c.id;
                nlohmann::ordered_json meta;
                meta["class"] = c.name;
                meta["sample"] = s.file_stem();
                s.ink.meta_json = meta.dump();
                s.truth = ideal.truth;
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

namespace {

// Points three or more steps apart closer than this are an accidental closure,
// unless they are the two ends of a designed loop.
constexpr double kClearance = 1.25;

bool has_accidental_closure(const Composed& c, double delta) {
    for (std::size_t k = 0; k < c.character.strokes.size(); ++k) {
        const Stroke& s = c.character.strokes[k];
        const StrokeTruth& t = c.truth.strokes[k];
        auto designed = [&](std::size_t i, std::size_t j) {
            for (std::size_t p = 0; p < t.labels.size(); ++p) {
                if (t.labels[p] == Label::Loop && t.primitives[p].start == i && t.primitives[p].end == j) return true;
            }
            return false;
        };
        for (std::size_t i = 1; i <= s.size(); ++i) {
            for (std::size_t j = i + 3; j <= s.size(); ++j) {
                if (distance(s.at1(i), s.at1(j)) <= kClearance * delta && !designed(i, j)) return true;
            }
        }
    }
    return false;
}

}  // namespace

Composed random_ideal_character(std::uint64_t seed, double delta) {
    Rng rng(derive_seed(seed, 1));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        CharacterSpec spec;
        const int strokes = rng.uniform_int(1, 3);
        for (int s = 0; s < strokes; ++s) {
            if (s > 0 && rng.uniform() < 0.15) {  // the first stroke is always drawn
                spec.push_back({make_point({rng.uniform(0.1, 0.9), rng.uniform(0.1, 0.9)})});
                continue;
            }
            StrokeBuilder b({rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8)}, rng.uniform(-180.0, 180.0), delta);
            const int prims = rng.uniform_int(1, 4);
            bool last_loop = false;
            for (int p = 0; p < prims; ++p) {
                if (p > 0 && rng.uniform() < 0.5) {
                    const double corner = rng.uniform(30.0, 150.0);
                    b.turn(rng.uniform() < 0.5 ? corner : -corner);
                }
                const double pick = rng.uniform();
                if (pick < 0.3 || (last_loop && pick < 0.8)) {
                    b.line(rng.uniform(0.1, 0.4));
                    last_loop = false;
                } else if (pick < 0.8) {
                    const double sweep = rng.uniform(40.0, 200.0);
                    b.arc(rng.uniform(0.08, 0.3), rng.uniform() < 0.5 ? sweep : -sweep);
                    last_loop = false;
                } else {
                    const bool ccw = rng.uniform() < 0.5;
                    b.loop(rng.uniform(0.04, 0.1), ccw);
                    // Leave outward, far enough that the exit clears the loop's first point.
                    b.turn(ccw ? -rng.uniform(80.0, 130.0) : rng.uniform(80.0, 130.0));
                    last_loop = true;
                }
            }
            spec.push_back(b.specs());
        }
        try {
            Composed c = compose_character(spec, delta);
            if (!has_accidental_closure(c, delta)) return c;
        } catch (const InkError&) {
            // Undetectable junction or too-short primitive; draw again.
        }
    }
    throw InkError("random_ideal_character: no valid character after 1000 draws");
}

}  // namespace inkseg
