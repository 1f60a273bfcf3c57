#pragma once

namespace acute {

// Package-level numeric thresholds. Every operation that compares against a
// boundary takes one of these, defaulting to the values below.
struct Tolerances {
    // Scale-relative collinearity test: |im w| <= degenerate * (1 + |w|).
    double degenerate = 1e-12;
    // Absolute tolerance for boundary membership (right triangles, isosceles
    // loci, fundamental-domain edges) and for equality of moduli points.
    double boundary = 1e-9;
};

inline constexpr Tolerances default_tolerances{};

} // namespace acute
