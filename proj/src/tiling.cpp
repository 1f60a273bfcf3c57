#include "acute/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

#include "acute/error.hpp"

namespace acute {

namespace {

const Complex kI{0.0, 1.0};
const Complex kRho{0.5, std::numbers::sqrt3 / 2.0};

struct Box {
    double x_min, x_max, y_min, y_max;
};

Box arc_box(const BoundaryArc& arc) {
    Box box{std::min(arc.from.real(), arc.to.real()), std::max(arc.from.real(), arc.to.real()),
            std::min(arc.from.imag(), arc.to.imag()), std::max(arc.from.imag(), arc.to.imag())};
    if (!arc.locus.is_line()) {
        // Geodesic arcs sit on circles centered on the real axis, so the only
        // interior extreme point is the top of the circle.
        const Complex c = arc.locus.center();
        if (c.real() > box.x_min && c.real() < box.x_max)
            box.y_max = std::max(box.y_max, c.imag() + arc.locus.radius());
    }
    return box;
}

bool meets(const std::vector<BoundaryArc>& boundary, const Viewport& vp) {
    Box box = arc_box(boundary.front());
    for (const BoundaryArc& arc : boundary) {
        const Box b = arc_box(arc);
        box = {std::min(box.x_min, b.x_min), std::max(box.x_max, b.x_max), std::min(box.y_min, b.y_min),
               std::max(box.y_max, b.y_max)};
    }
    return box.x_max >= vp.x_min && box.x_min <= vp.x_max && box.y_max >= vp.y_min && box.y_min <= vp.y_max;
}

} // namespace

void Viewport::validate() const {
    if (!(x_min < x_max) || !(0.0 < y_min && y_min < y_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
        !std::isfinite(y_max))
        throw Error(ErrorCode::InvalidArgument, "viewport needs x_min < x_max and 0 < y_min < y_max");
    if (width_px <= 0 || height_px <= 0)
        throw Error(ErrorCode::InvalidArgument, "viewport pixel size must be positive");
    if (precision < 0 || precision > 17)
        throw Error(ErrorCode::InvalidArgument, "viewport precision must be in [0, 17]");
}

std::vector<GroupElement> enumerate_elements(int depth) {
    if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be non-negative");
    const UnimodularMatrix generators[] = {UnimodularMatrix::S(), UnimodularMatrix::T(), UnimodularMatrix::T_inv(),
                                           UnimodularMatrix::R()};
    std::vector<GroupElement> out{{UnimodularMatrix::identity(), 0}};
    std::set<UnimodularMatrix> seen{UnimodularMatrix::identity()};
    std::size_t frontier_begin = 0;
    for (int level = 1; level <= depth; ++level) {
        const std::size_t frontier_end = out.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (const UnimodularMatrix& gen : generators) {
                const UnimodularMatrix next = compose(out[k].element, gen).sign_normalized();
                if (seen.insert(next).second) out.push_back({next, level});
            }
        }
        frontier_begin = frontier_end;
    }
    std::sort(out.begin(), out.end(), [](const GroupElement& x, const GroupElement& y) {
        return x.depth != y.depth ? x.depth < y.depth : x.element < y.element;
    });
    return out;
}

std::vector<BoundaryArc> tile_boundary(const UnimodularMatrix& g, double top) {
    static const Circline unit_circle = Circline::circle({0.0, 0.0}, 1.0);
    static const Circline half_line = Circline::line({0.5, 0.0}, kI);
    static const Circline axis_line = Circline::line({0.0, 0.0}, kI);

    const Complex p_i = act_raw(g, kI);
    const Complex p_rho = act_raw(g, kRho);
    const Circline arc = circline_image(g, unit_circle);
    const Circline right = circline_image(g, half_line);
    const Circline left = circline_image(g, axis_line);

    if (g.c() == 0) {
        // g fixes infinity: the two rays stay vertical and are cut at the top.
        const double y = std::max(top, 1.0);
        const Complex rho_top{p_rho.real(), y};
        const Complex i_top{p_i.real(), y};
        return {{arc, p_i, p_rho},
                {right, p_rho, rho_top},
                {Circline::line(i_top, {1.0, 0.0}), rho_top, i_top},
                {left, i_top, p_i}};
    }
    const Complex cusp{static_cast<double>(g.a()) / static_cast<double>(g.c()), 0.0};
    return {{arc, p_i, p_rho}, {right, p_rho, cusp}, {left, cusp, p_i}};
}

std::vector<Tile> enumerate_tiles(int depth, const Viewport& vp) {
    vp.validate();
    std::vector<Tile> tiles;
    for (const GroupElement& e : enumerate_elements(depth)) {
        auto boundary = tile_boundary(e.element, vp.y_max);
        if (!meets(boundary, vp)) continue;
        tiles.push_back({e.element, e.depth, std::move(boundary),
                         e.element.det() == 1 ? Shade::Light : Shade::Dark});
    }
    return tiles;
}

} // namespace acute
