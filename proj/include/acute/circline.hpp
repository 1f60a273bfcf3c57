#pragma once

#include "acute/complex.hpp"
#include "acute/modular.hpp"

namespace acute {

// Locus A|z|^2 + 2 re(conj(B) z) + C = 0 with A, C real. A = 0 is a line;
// otherwise a circle with center -B/A and radius sqrt(|B|^2 - AC)/|A|.
class Circline {
public:
    // Throws InvalidArgument for an empty or single-point locus.
    Circline(double A, Complex B, double C);

    static Circline circle(Complex center, double radius);
    // The line through p with direction d.
    static Circline line(Complex p, Complex direction);

    double A() const noexcept { return A_; }
    Complex B() const noexcept { return B_; }
    double C() const noexcept { return C_; }

    bool is_line() const noexcept { return A_ == 0.0; }
    Complex center() const;
    double radius() const;

    double evaluate(Complex z) const noexcept;
    // Euclidean distance from z to the locus.
    double distance(Complex z) const;

    // Scaled so max(|A|, |B|, |C|) = 1, with the first of (A, re B, im B, C)
    // whose magnitude exceeds 1e-9 made positive.
    Circline normalized() const;

private:
    double A_;
    Complex B_;
    double C_;
};

// Image of c under act(g, .), including the conjugate-linear branch.
Circline circline_image(const UnimodularMatrix& g, const Circline& c);

bool approx_equal(const Circline& x, const Circline& y, double eps);

} // namespace acute
