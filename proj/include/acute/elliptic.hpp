#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "acute/modular.hpp"
#include "acute/tolerance.hpp"
#include "acute/triangle.hpp"

namespace acute {

// Edge of a labeled triangle about whose midpoint the copy is rotated.
enum class EdgeChoice { E12, E13, E23 };

std::string_view to_string(EdgeChoice e);
EdgeChoice parse_edge(std::string_view text);
inline constexpr std::array<EdgeChoice, 3> all_edges{EdgeChoice::E12, EdgeChoice::E13, EdgeChoice::E23};

// Vertices in cyclic order; q2 - q1 == q3 - q4.
struct Parallelogram {
    std::array<Complex, 4> q;
};

// Positively oriented lattice basis: w1 != 0 and im(w2 / w1) > 0.
class LatticeBasis {
public:
    // Throws CollinearBasis for collinear vectors and InvalidArgument for a
    // negatively oriented pair.
    LatticeBasis(Complex w1, Complex w2, const Tolerances& tol = default_tolerances);

    // Swaps the vectors when needed to make the pair positively oriented.
    static LatticeBasis oriented(Complex w1, Complex w2, const Tolerances& tol = default_tolerances);

    Complex w1() const noexcept { return w1_; }
    Complex w2() const noexcept { return w2_; }

private:
    Complex w1_;
    Complex w2_;
};

struct Doubling {
    Parallelogram parallelogram;
    LatticeBasis basis;
};

// Rotates the triangle by 180 degrees about the midpoint of edge e and returns
// the union with the original. The basis holds the two edge vectors leaving
// the lexicographically smallest vertex (by re, then im), swapped to positive
// orientation. Throws DegenerateInput, or ObtuseInput unless allow_obtuse.
Doubling double_across(const LabeledTriangle& tri, EdgeChoice e, bool allow_obtuse = false,
                       const Tolerances& tol = default_tolerances);

// tau = w2 / w1.
ModuliPoint lattice_tau(const LatticeBasis& basis);

// The reduced elliptic-curve modulus of a point of the closure of T.
// Throws NotInClosureOfT for obtuse moduli.
ModuliPoint p_map(ModuliPoint z, const Tolerances& tol = default_tolerances);

// A preimage of the class of w under p_map, inside the closure of T.
ModuliPoint p_section(ModuliPoint w, const Tolerances& tol = default_tolerances);

// Points of T in the orbit of z under the 3-cycles, deduplicated. Throws NotInT.
std::vector<ModuliPoint> fiber_in_T(ModuliPoint z, const Tolerances& tol = default_tolerances);

struct CurveResult {
    ModuliPoint modulus;      // reduced representative
    UnimodularMatrix witness; // witness * tau == modulus
    ModuliPoint tau;          // lattice ratio before reduction
    EdgeChoice edge;
    Doubling doubling;
};

CurveResult curve_details(const LabeledTriangle& tri, EdgeChoice e = EdgeChoice::E12,
                          bool allow_obtuse = false, const Tolerances& tol = default_tolerances);

ModuliPoint curve_of_triangle(const LabeledTriangle& tri, EdgeChoice e = EdgeChoice::E12,
                              bool allow_obtuse = false, const Tolerances& tol = default_tolerances);

} // namespace acute
