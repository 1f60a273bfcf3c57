#include "acute/modular.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "acute/error.hpp"

namespace acute {

namespace {

[[noreturn]] void overflow() {
    throw Error(ErrorCode::IntegerOverflow, "matrix entry exceeds the 64-bit range");
}

std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) overflow();
    return r;
}

std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) overflow();
    return r;
}

std::int64_t neg(std::int64_t x) {
    if (x == std::numeric_limits<std::int64_t>::min()) overflow();
    return -x;
}

constexpr int kMaxReductionSteps = 64;

} // namespace

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    __extension__ using wide = __int128;
    const wide det = static_cast<wide>(a) * d - static_cast<wide>(b) * c;
    if (det != 1 && det != -1)
        throw Error(ErrorCode::InvalidMatrix, "matrix determinant is not +-1");
    det_ = static_cast<int>(det);
}

UnimodularMatrix UnimodularMatrix::negated() const {
    return {neg(a_), neg(b_), neg(c_), neg(d_)};
}

UnimodularMatrix UnimodularMatrix::sign_normalized() const {
    const std::int64_t lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
    return lead < 0 ? negated() : *this;
}

bool UnimodularMatrix::equal_up_to_sign(const UnimodularMatrix& other) const {
    return sign_normalized() == other.sign_normalized();
}

UnimodularMatrix compose(const UnimodularMatrix& g, const UnimodularMatrix& h) {
    return {add(mul(g.a(), h.a()), mul(g.b(), h.c())), add(mul(g.a(), h.b()), mul(g.b(), h.d())),
            add(mul(g.c(), h.a()), mul(g.d(), h.c())), add(mul(g.c(), h.b()), mul(g.d(), h.d()))};
}

UnimodularMatrix inverse(const UnimodularMatrix& g) {
    // adj(g) / det, and det = +-1
    if (g.det() == 1) return {g.d(), neg(g.b()), neg(g.c()), g.a()};
    return {neg(g.d()), g.b(), g.c(), neg(g.a())};
}

Complex act_raw(const UnimodularMatrix& g, Complex z) {
    // Expanded form of (a w + b)/(c w + d) with w = z or conj(z). The
    // imaginary part is det * im(w) / |cw + d|^2, which is positive either way.
    const double a = static_cast<double>(g.a()), b = static_cast<double>(g.b());
    const double c = static_cast<double>(g.c()), d = static_cast<double>(g.d());
    const double x = z.real(), y = z.imag();
    const double den_re = c * x + d;
    const double den_im = c * y;
    const double den = den_re * den_re + den_im * den_im;
    const double re = ((a * x + b) * den_re + a * c * y * y) / den;
    return {re, y / den};
}

ModuliPoint act(const UnimodularMatrix& g, ModuliPoint z) {
    return ModuliPoint(act_raw(g, z.z()));
}

std::string format_matrix(const UnimodularMatrix& g) {
    return "[[" + std::to_string(g.a()) + "," + std::to_string(g.b()) + "],[" +
           std::to_string(g.c()) + "," + std::to_string(g.d()) + "]]";
}

UnimodularMatrix parse_matrix(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    auto fail = [&]() -> UnimodularMatrix {
        throw Error(ErrorCode::ParseError, "malformed matrix '" + std::string(text) + "'");
    };

    std::string_view s = compact;
    std::int64_t entries[4];
    const char* expected_before[4] = {"[[", ",", "],[", ","};
    for (int k = 0; k < 4; ++k) {
        std::string_view sep = expected_before[k];
        if (s.substr(0, sep.size()) != sep) return fail();
        s.remove_prefix(sep.size());
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), entries[k]);
        if (ec != std::errc{} || ptr == s.data()) return fail();
        s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    }
    if (s != "]]") return fail();
    return {entries[0], entries[1], entries[2], entries[3]};
}

UnimodularMatrix parse_word(std::string_view word) {
    UnimodularMatrix g;
    for (char ch : word) {
        switch (ch) {
        case 'S': g = compose(g, UnimodularMatrix::S()); break;
        case 'T': g = compose(g, UnimodularMatrix::T()); break;
        case 't': g = compose(g, UnimodularMatrix::T_inv()); break;
        case 'R': g = compose(g, UnimodularMatrix::R()); break;
        default:
            throw Error(ErrorCode::ParseError,
                        "unknown generator '" + std::string(1, ch) + "' in word '" + std::string(word) + "'");
        }
    }
    return g;
}

UnimodularMatrix parse_group_element(std::string_view text) {
    if (!text.empty() && text.front() == '[') return parse_matrix(text);
    return parse_word(text);
}

bool close(Complex z1, Complex z2, double eps) {
    return std::abs(z1.real() - z2.real()) <= eps && std::abs(z1.imag() - z2.imag()) <= eps;
}

ReductionResult reduce_sl2z(ModuliPoint z, const Tolerances& tol) {
    const double eps = tol.boundary;
    Complex w = z.z();
    UnimodularMatrix witness;

    // Translation window is [-1/2 - eps, 1/2 - eps) so that re = +1/2 lands on
    // -1/2, and points within eps inside the unit circle count as on it. Both
    // keep the output a fixed point of the loop.
    int steps = 0;
    for (;; ++steps) {
        if (steps >= kMaxReductionSteps || !is_finite(w))
            throw Error(ErrorCode::NonTermination, "reduction did not converge for " + format_complex(z.z()));
        const double shift = std::floor(w.real() + 0.5 + eps);
        if (std::abs(shift) > 0x1p62)
            throw Error(ErrorCode::IntegerOverflow, "translation out of range for " + format_complex(z.z()));
        const auto n = static_cast<std::int64_t>(shift);
        if (n != 0) {
            witness = compose(UnimodularMatrix::T_pow(neg(n)), witness);
            w -= static_cast<double>(n);
        }
        if (std::norm(w) < 1.0 - eps) {
            witness = compose(UnimodularMatrix::S(), witness);
            w = -1.0 / w;
            continue;
        }
        break;
    }

    // Right half of the unit arc folds onto the left half.
    if (w.real() > 0.0 && std::norm(w) <= 1.0 + eps) {
        witness = compose(UnimodularMatrix::S(), witness);
        w = -1.0 / w;
    }
    return {ModuliPoint(w), witness};
}

ReductionResult canonicalize_gl2z(ModuliPoint z, const Tolerances& tol) {
    ReductionResult r = reduce_sl2z(z, tol);
    if (r.point.re() < 0.0) {
        r.witness = compose(UnimodularMatrix::R(), r.witness);
        r.point = ModuliPoint({-r.point.re(), r.point.im()});
    }
    return r;
}

bool equivalent_sl2z(ModuliPoint z1, ModuliPoint z2, const Tolerances& tol) {
    return close(reduce_sl2z(z1, tol).point.z(), reduce_sl2z(z2, tol).point.z(), tol.boundary);
}

} // namespace acute
