#pragma once

#include <string_view>

#include "acute/complex.hpp"
#include "acute/tolerance.hpp"

namespace acute {

struct LabeledTriangle {
    Complex v1;
    Complex v2;
    Complex v3;
};

// A point of the upper half-plane: the third vertex of a labeled triangle
// after its first two vertices have been moved to 0 and 1.
class ModuliPoint {
public:
    // Throws InvalidArgument unless z is finite with im(z) > 0.
    explicit ModuliPoint(Complex z);

    Complex z() const noexcept { return z_; }
    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }

private:
    Complex z_;
};

enum class TriangleClass { Acute, Right, Obtuse, Degenerate };

std::string_view to_string(TriangleClass c);

// Interior angles in radians at v1, v2, v3.
struct AngleTriple {
    double alpha;
    double beta;
    double gamma;

    double max() const noexcept;
};

struct Normalized {
    ModuliPoint point;
    // True when the normalizing similarity had to reverse orientation.
    bool reflected;
};

Normalized normalize_labeled(const LabeledTriangle& tri, const Tolerances& tol = default_tolerances);

TriangleClass classify_point(ModuliPoint z, const Tolerances& tol = default_tolerances);

// Never throws for finite input; collinear or coincident vertices give Degenerate.
TriangleClass classify_triangle(const LabeledTriangle& tri, const Tolerances& tol = default_tolerances);

AngleTriple angles_of(const LabeledTriangle& tri, const Tolerances& tol = default_tolerances);

// True when z satisfies the closed inequalities 0 <= re <= 1, |z - 1/2| >= 1/2
// (within tolerance), i.e. classify_point(z) != Obtuse.
bool in_closure_of_T(ModuliPoint z, const Tolerances& tol = default_tolerances);

} // namespace acute
