#include "acute/svg.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "acute/error.hpp"
#include "acute/s3.hpp"

namespace acute {

namespace {

struct Style {
    const char* light = "#e8e8e8";
    const char* dark = "#9a9a9a";
    const char* yellow = "#f5d327";
    const char* purple = "#8e4fb5";
    const char* stroke = "#333333";
    const char* text = "#000000";
};

constexpr Style kStyle{};
constexpr int kLabelStrip = 28;

class Canvas {
public:
    explicit Canvas(const Viewport& vp) : vp_(vp) {}

    std::string num(double v) const {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, vp_.precision);
        std::string s(buf, ptr);
        if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
        return s;
    }

    double sx() const { return vp_.width_px / (vp_.x_max - vp_.x_min); }
    double sy() const { return vp_.height_px / (vp_.y_max - vp_.y_min); }
    double px(double x) const { return (x - vp_.x_min) * sx(); }
    double py(double y) const { return (vp_.y_max - y) * sy(); }
    std::string point(Complex z) const { return num(px(z.real())) + " " + num(py(z.imag())); }

    // Path data for a closed boundary made of line segments and arcs of
    // circles centered on the real axis.
    std::string path(const std::vector<BoundaryArc>& boundary) const {
        std::string d = "M " + point(boundary.front().from);
        for (const BoundaryArc& arc : boundary) {
            if (arc.locus.is_line()) {
                d += " L " + point(arc.to);
            } else {
                const double r = arc.locus.radius();
                // Upper arcs run clockwise on screen when heading right.
                const char* sweep = arc.from.real() < arc.to.real() ? "1" : "0";
                d += " A " + num(r * sx()) + " " + num(r * sy()) + " 0 0 " + sweep + " " + point(arc.to);
            }
        }
        return d + " Z";
    }

private:
    const Viewport& vp_;
};

// The six regions of T, each as (boundary, interior sample point), left half
// first. The right half is the mirror image under z -> 1 - conj(z).
std::vector<std::pair<std::vector<BoundaryArc>, Complex>> regions_of_T(double top) {
    const Complex rho{0.5, std::numbers::sqrt3 / 2.0};
    const Complex mid{0.5, 0.5};
    const Complex up{0.0, 1.0};
    const Circline unit = Circline::circle({0.0, 0.0}, 1.0);
    const Circline around_one = Circline::circle({1.0, 0.0}, 1.0);
    const Circline bottom = Circline::circle({0.5, 0.0}, 0.5);
    const Circline left = Circline::line({0.0, 0.0}, up);
    const Circline middle = Circline::line({0.5, 0.0}, up);
    const Circline right = Circline::line({1.0, 0.0}, up);
    const Circline roof = Circline::line({0.0, top}, {1.0, 0.0});
    const Complex zero{0.0, 0.0}, one{1.0, 0.0}, i{0.0, 1.0}, one_i{1.0, 1.0};

    return {
        {{{around_one, zero, rho}, {middle, rho, mid}, {bottom, mid, zero}}, {0.4, 0.7}},
        {{{left, zero, i}, {unit, i, rho}, {around_one, rho, zero}}, {0.1, 0.5}},
        {{{left, i, {0.0, top}}, {roof, {0.0, top}, {0.5, top}}, {middle, {0.5, top}, rho}, {unit, rho, i}},
         {0.25, 1.5}},
        {{{unit, one, rho}, {middle, rho, mid}, {bottom, mid, one}}, {0.6, 0.7}},
        {{{right, one, one_i}, {around_one, one_i, rho}, {unit, rho, one}}, {0.9, 0.5}},
        {{{right, one_i, {1.0, top}}, {roof, {1.0, top}, {0.5, top}}, {middle, {0.5, top}, rho},
          {around_one, rho, one_i}},
         {0.75, 1.5}},
    };
}

} // namespace

std::string render_svg(const std::vector<Tile>& tiles, const Viewport& vp, bool overlay_T) {
    vp.validate();
    if (tiles.empty()) throw Error(ErrorCode::EmptyTileList, "nothing to render");
    const Canvas canvas(vp);
    const int width = vp.width_px;
    const int height = vp.height_px + kLabelStrip;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<defs><clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"" << vp.width_px << "\" height=\""
        << vp.height_px << "\"/></clipPath></defs>\n"
        << "<g id=\"tiles\" clip-path=\"url(#viewport)\" stroke=\"" << kStyle.stroke
        << "\" stroke-width=\"0.5\" stroke-linejoin=\"round\">\n";
    for (const Tile& tile : tiles) {
        const bool light = tile.shade == Shade::Light;
        out << "<path class=\"tile " << (light ? "light" : "dark") << "\" data-element=\""
            << format_matrix(tile.element) << "\" fill=\"" << (light ? kStyle.light : kStyle.dark) << "\" d=\""
            << canvas.path(tile.boundary) << "\"/>\n";
    }
    out << "</g>\n";

    if (overlay_T) {
        const double top = std::max(vp.y_max, 1.0);
        out << "<g id=\"regions-of-T\" clip-path=\"url(#viewport)\" stroke=\"" << kStyle.stroke
            << "\" stroke-width=\"0.75\" stroke-linejoin=\"round\">\n";
        for (const auto& [boundary, sample] : regions_of_T(top)) {
            const RegionId id = region_of(ModuliPoint(sample));
            const bool yellow = id.color == RegionColor::Yellow;
            out << "<path class=\"region " << (yellow ? "yellow" : "purple") << "\" data-ordering=\""
                << id.ordering.cycle_notation() << "\" fill=\"" << (yellow ? kStyle.yellow : kStyle.purple)
                << "\" d=\"" << canvas.path(boundary) << "\"/>\n";
        }
        out << "</g>\n";
    }

    static const std::array<std::pair<double, const char*>, 5> ticks{
        {{-1.0, "-1"}, {-0.5, "-1/2"}, {0.0, "0"}, {0.5, "1/2"}, {1.0, "1"}}};
    out << "<g id=\"axis\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" fill=\"" << kStyle.text
        << "\">\n";
    for (const auto& [x, label] : ticks) {
        if (x < vp.x_min || x > vp.x_max) continue;
        const std::string px = canvas.num(canvas.px(x));
        out << "<line x1=\"" << px << "\" y1=\"" << vp.height_px << "\" x2=\"" << px << "\" y2=\""
            << vp.height_px + 6 << "\" stroke=\"" << kStyle.text << "\" stroke-width=\"1\"/>\n"
            << "<text x=\"" << px << "\" y=\"" << height - 6 << "\">" << label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace acute
