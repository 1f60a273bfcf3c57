#include "acute/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acute/error.hpp"
#include "acute/s3.hpp"

namespace acute {

namespace {

bool collinear(Complex w1, Complex w2, const Tolerances& tol) {
    if (w1 == Complex{}) return true;
    const Complex ratio = w2 / w1;
    return !is_finite(ratio) || std::abs(ratio.imag()) <= tol.degenerate * (1.0 + std::abs(ratio));
}

} // namespace

std::string_view to_string(EdgeChoice e) {
    switch (e) {
    case EdgeChoice::E12: return "E12";
    case EdgeChoice::E13: return "E13";
    case EdgeChoice::E23: return "E23";
    }
    return "E12";
}

EdgeChoice parse_edge(std::string_view text) {
    for (EdgeChoice e : all_edges)
        if (to_string(e) == text) return e;
    throw Error(ErrorCode::ParseError, "unknown edge '" + std::string(text) + "' (expected E12, E13 or E23)");
}

LatticeBasis::LatticeBasis(Complex w1, Complex w2, const Tolerances& tol) : w1_(w1), w2_(w2) {
    if (!is_finite(w1) || !is_finite(w2) || collinear(w1, w2, tol))
        throw Error(ErrorCode::CollinearBasis, "lattice basis vectors are collinear");
    if ((w2 / w1).imag() < 0.0)
        throw Error(ErrorCode::InvalidArgument, "lattice basis is negatively oriented");
}

LatticeBasis LatticeBasis::oriented(Complex w1, Complex w2, const Tolerances& tol) {
    if (!is_finite(w1) || !is_finite(w2) || collinear(w1, w2, tol))
        throw Error(ErrorCode::CollinearBasis, "lattice basis vectors are collinear");
    if ((w2 / w1).imag() < 0.0) std::swap(w1, w2);
    return LatticeBasis(w1, w2, tol);
}

Doubling double_across(const LabeledTriangle& tri, EdgeChoice e, bool allow_obtuse, const Tolerances& tol) {
    const TriangleClass cls = classify_triangle(tri, tol);
    if (cls == TriangleClass::Degenerate)
        throw Error(ErrorCode::DegenerateInput, "triangle vertices are coincident or collinear");
    if (cls == TriangleClass::Obtuse && !allow_obtuse)
        throw Error(ErrorCode::ObtuseInput, "doubling is defined for acute or right triangles");

    Complex m1, m2, apex;
    switch (e) {
    case EdgeChoice::E12: m1 = tri.v1; m2 = tri.v2; apex = tri.v3; break;
    case EdgeChoice::E13: m1 = tri.v1; m2 = tri.v3; apex = tri.v2; break;
    case EdgeChoice::E23: m1 = tri.v2; m2 = tri.v3; apex = tri.v1; break;
    }
    const Complex rotated = m1 + m2 - apex;
    const Parallelogram par{{apex, m1, rotated, m2}};

    const auto lowest = std::min_element(par.q.begin(), par.q.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    const auto k = static_cast<std::size_t>(lowest - par.q.begin());
    const Complex next = par.q[(k + 1) % 4] - par.q[k];
    const Complex prev = par.q[(k + 3) % 4] - par.q[k];
    return {par, LatticeBasis::oriented(next, prev, tol)};
}

ModuliPoint lattice_tau(const LatticeBasis& basis) {
    return ModuliPoint(basis.w2() / basis.w1());
}

ModuliPoint p_map(ModuliPoint z, const Tolerances& tol) {
    if (!in_closure_of_T(z, tol))
        throw Error(ErrorCode::NotInClosureOfT, "point " + format_complex(z.z()) + " is an obtuse triangle");
    return reduce_sl2z(z, tol).point;
}

ModuliPoint p_section(ModuliPoint w, const Tolerances& tol) {
    const ModuliPoint r = reduce_sl2z(w, tol).point;
    if (r.re() >= 0.0) return r;
    return ModuliPoint(r.z() + 1.0);
}

std::vector<ModuliPoint> fiber_in_T(ModuliPoint z, const Tolerances& tol) {
    if (classify_point(z, tol) != TriangleClass::Acute)
        throw Error(ErrorCode::NotInT, "point " + format_complex(z.z()) + " is not in T");
    std::vector<ModuliPoint> fiber;
    for (const Permutation& p : {Permutation::identity(), Permutation::cycle123(), Permutation::cycle132()}) {
        const ModuliPoint w = s3_apply(p, z);
        if (classify_point(w, tol) != TriangleClass::Acute) continue;
        const bool seen = std::any_of(fiber.begin(), fiber.end(),
                                      [&](const ModuliPoint& f) { return std::abs(f.z() - w.z()) < tol.boundary; });
        if (!seen) fiber.push_back(w);
    }
    return fiber;
}

CurveResult curve_details(const LabeledTriangle& tri, EdgeChoice e, bool allow_obtuse, const Tolerances& tol) {
    Doubling doubling = double_across(tri, e, allow_obtuse, tol);
    const ModuliPoint tau = lattice_tau(doubling.basis);
    const ReductionResult reduced = reduce_sl2z(tau, tol);
    return {reduced.point, reduced.witness, tau, e, doubling};
}

ModuliPoint curve_of_triangle(const LabeledTriangle& tri, EdgeChoice e, bool allow_obtuse, const Tolerances& tol) {
    return curve_details(tri, e, allow_obtuse, tol).modulus;
}

} // namespace acute
