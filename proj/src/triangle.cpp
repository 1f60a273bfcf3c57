#include "acute/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "acute/error.hpp"

namespace acute {

namespace {

void require_finite(const LabeledTriangle& tri) {
    if (!is_finite(tri.v1) || !is_finite(tri.v2) || !is_finite(tri.v3))
        throw Error(ErrorCode::InvalidArgument, "triangle vertices must be finite");
}

// w = (v3 - v1) / (v2 - v1), or nothing if the triangle is degenerate.
bool normalized_ratio(const LabeledTriangle& tri, const Tolerances& tol, Complex& w) {
    const Complex base = tri.v2 - tri.v1;
    const double scale = std::abs(tri.v1) + std::abs(tri.v2) + std::abs(tri.v3);
    if (base == Complex{} || std::abs(base) <= tol.degenerate * scale) return false;
    w = (tri.v3 - tri.v1) / base;
    if (!is_finite(w)) return false;
    return std::abs(w.imag()) > tol.degenerate * (1.0 + std::abs(w));
}

double angle_between(Complex u, Complex v) {
    const double cross = u.real() * v.imag() - u.imag() * v.real();
    const double dot = u.real() * v.real() + u.imag() * v.imag();
    return std::atan2(std::abs(cross), dot);
}

} // namespace

ModuliPoint::ModuliPoint(Complex z) : z_(z) {
    if (!is_finite(z) || !(z.imag() > 0.0))
        throw Error(ErrorCode::InvalidArgument,
                    "moduli point must lie in the upper half-plane, got " + format_complex(z));
}

std::string_view to_string(TriangleClass c) {
    switch (c) {
    case TriangleClass::Acute: return "Acute";
    case TriangleClass::Right: return "Right";
    case TriangleClass::Obtuse: return "Obtuse";
    case TriangleClass::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

double AngleTriple::max() const noexcept {
    return std::max({alpha, beta, gamma});
}

Normalized normalize_labeled(const LabeledTriangle& tri, const Tolerances& tol) {
    require_finite(tri);
    Complex w;
    if (!normalized_ratio(tri, tol, w))
        throw Error(ErrorCode::DegenerateInput, "triangle vertices are coincident or collinear");
    if (w.imag() > 0.0) return {ModuliPoint(w), false};
    return {ModuliPoint(std::conj(w)), true};
}

TriangleClass classify_point(ModuliPoint z, const Tolerances& tol) {
    const double x = z.re();
    const double circle = std::abs(z.z() - 0.5) - 0.5;
    const double eps = tol.boundary;
    if (std::abs(x) <= eps || std::abs(x - 1.0) <= eps || std::abs(circle) <= eps)
        return TriangleClass::Right;
    if (x > eps && x < 1.0 - eps && circle > eps) return TriangleClass::Acute;
    return TriangleClass::Obtuse;
}

TriangleClass classify_triangle(const LabeledTriangle& tri, const Tolerances& tol) {
    require_finite(tri);
    Complex w;
    if (!normalized_ratio(tri, tol, w)) return TriangleClass::Degenerate;
    return classify_point(ModuliPoint(w.imag() > 0.0 ? w : std::conj(w)), tol);
}

AngleTriple angles_of(const LabeledTriangle& tri, const Tolerances& tol) {
    require_finite(tri);
    Complex w;
    if (!normalized_ratio(tri, tol, w))
        throw Error(ErrorCode::DegenerateInput, "triangle vertices are coincident or collinear");
    const double alpha = angle_between(tri.v2 - tri.v1, tri.v3 - tri.v1);
    const double beta = angle_between(tri.v1 - tri.v2, tri.v3 - tri.v2);
    const double gamma = angle_between(tri.v1 - tri.v3, tri.v2 - tri.v3);
    return {alpha, beta, gamma};
}

bool in_closure_of_T(ModuliPoint z, const Tolerances& tol) {
    return classify_point(z, tol) != TriangleClass::Obtuse;
}

} // namespace acute
