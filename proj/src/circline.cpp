#include "acute/circline.hpp"

#include <algorithm>
#include <cmath>

#include "acute/error.hpp"

namespace acute {

Circline::Circline(double A, Complex B, double C) : A_(A), B_(B), C_(C) {
    if (!std::isfinite(A) || !is_finite(B) || !std::isfinite(C))
        throw Error(ErrorCode::InvalidArgument, "circline coefficients must be finite");
    if (!(std::norm(B) - A * C > 0.0))
        throw Error(ErrorCode::InvalidArgument, "circline locus is empty or a single point");
}

Circline Circline::circle(Complex center, double radius) {
    // |z - m|^2 - r^2 = |z|^2 - 2 re(conj(m) z) + |m|^2 - r^2
    return {1.0, -center, std::norm(center) - radius * radius};
}

Circline Circline::line(Complex p, Complex direction) {
    // Normal n = i * direction; the line is re(conj(n) (z - p)) = 0.
    const Complex n = Complex(0.0, 1.0) * direction;
    return {0.0, n, -2.0 * (std::conj(n) * p).real()};
}

Complex Circline::center() const {
    if (is_line()) throw Error(ErrorCode::InvalidArgument, "a line has no center");
    return -B_ / A_;
}

double Circline::radius() const {
    if (is_line()) throw Error(ErrorCode::InvalidArgument, "a line has no radius");
    return std::sqrt(std::norm(B_) - A_ * C_) / std::abs(A_);
}

double Circline::evaluate(Complex z) const noexcept {
    return A_ * std::norm(z) + 2.0 * (std::conj(B_) * z).real() + C_;
}

double Circline::distance(Complex z) const {
    if (is_line()) return std::abs(evaluate(z)) / (2.0 * std::abs(B_));
    return std::abs(std::abs(z - center()) - radius());
}

Circline Circline::normalized() const {
    const double scale = std::max({std::abs(A_), std::abs(B_), std::abs(C_)});
    double A = A_ / scale, C = C_ / scale;
    Complex B = B_ / scale;
    for (double lead : {A, B.real(), B.imag(), C}) {
        if (std::abs(lead) > 1e-9) {
            if (lead < 0.0) {
                A = -A;
                B = -B;
                C = -C;
            }
            break;
        }
    }
    return {A, B, C};
}

Circline circline_image(const UnimodularMatrix& g, const Circline& c) {
    // Pull back through adj(g) ~ g^-1: H' = adj^T H adj with H the Hermitian
    // matrix [[A, B], [conj B, C]]. A det -1 element first conjugates.
    const Complex B = g.det() == 1 ? c.B() : std::conj(c.B());
    const double A = c.A(), C = c.C();
    const double p = static_cast<double>(g.d()), q = static_cast<double>(-g.b());
    const double r = static_cast<double>(-g.c()), s = static_cast<double>(g.a());
    const double A2 = A * p * p + 2.0 * p * r * B.real() + C * r * r;
    const Complex B2 = A * p * q + B * (p * s) + std::conj(B) * (r * q) + C * r * s;
    const double C2 = A * q * q + 2.0 * q * s * B.real() + C * s * s;
    return {A2, B2, C2};
}

bool approx_equal(const Circline& x, const Circline& y, double eps) {
    const Circline a = x.normalized(), b = y.normalized();
    return std::abs(a.A() - b.A()) <= eps && std::abs(a.B() - b.B()) <= eps && std::abs(a.C() - b.C()) <= eps;
}

} // namespace acute
