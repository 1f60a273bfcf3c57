#pragma once

#include <string>
#include <vector>

#include "acute/circline.hpp"
#include "acute/modular.hpp"

namespace acute {

struct Viewport {
    double x_min = -1.1;
    double x_max = 1.1;
    double y_min = 0.001;
    // Cusp strips are clipped here.
    double y_max = 2.2;
    int width_px = 800;
    int height_px = 800;
    int precision = 6;

    // Throws InvalidArgument.
    void validate() const;
};

enum class Shade { Light, Dark };

// Piece of a tile boundary: the part of `locus` running from `from` to `to`.
struct BoundaryArc {
    Circline locus;
    Complex from;
    Complex to;
};

struct Tile {
    UnimodularMatrix element; // sign-normalized
    int depth;                // word length over {S, T, t, R}
    std::vector<BoundaryArc> boundary;
    Shade shade;
};

struct GroupElement {
    UnimodularMatrix element;
    int depth;
};

// Breadth-first enumeration of GL(2,Z) modulo +-I over the generators
// {S, T, T^-1, R}, sorted by (depth, a, b, c, d).
std::vector<GroupElement> enumerate_elements(int depth);

// Images of the base half-domain {0 <= re <= 1/2, |z| >= 1} under every
// element of word length <= depth whose bounding box meets the viewport.
std::vector<Tile> enumerate_tiles(int depth, const Viewport& vp = {});

// Boundary of g applied to the base half-domain, cusp strips closed at
// max(top, 1).
std::vector<BoundaryArc> tile_boundary(const UnimodularMatrix& g, double top);

} // namespace acute
