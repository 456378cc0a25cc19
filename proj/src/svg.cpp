#include "inkseg/svg.hpp"

#include <array>
#include <sstream>

#include "inkseg/ink_io.hpp"

namespace inkseg {

namespace {

constexpr double kSize = 512.0;
constexpr double kMargin = 16.0;
constexpr std::array<const char*, 4> kColors{"black", "red", "green", "blue"};

std::string sx(double x) { return format_real(kMargin + x * (kSize - 2 * kMargin)); }
std::string sy(double y) { return format_real(kSize - kMargin - y * (kSize - 2 * kMargin)); }

}  // namespace

std::string render_svg(const Character& c, const std::vector<SegmentationResult>& r) {
    if (r.size() != c.strokes.size()) throw InkError("render_svg: segmentation does not match character");
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
    out << "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
    std::size_t color = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Stroke& s = c.strokes[i];
        for (const SubUnit& u : r[i].subunits) {
            const char* col = kColors[color++ % kColors.size()];
            if (u.range.length() == 1 || u.label == Label::PointStroke) {
                const Point& p = s.at1(u.range.start);
                out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"" << col
                    << "\"/>\n";
                continue;
            }
            out << "<polyline fill=\"none\" stroke=\"" << col
                << "\" stroke-width=\"2\" stroke-linecap=\"round\" stroke-linejoin=\"round\" points=\"";
            // Share the boundary point with the next sub-unit so the trace has no gaps.
            const std::size_t last = std::min(u.range.end + 1, s.size());
            for (std::size_t n = u.range.start; n <= last; ++n) {
                if (n > u.range.start) out << ' ';
                out << sx(s.at1(n).x) << ',' << sy(s.at1(n).y);
            }
            out << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace inkseg
