#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>

#include "acute/tolerance.hpp"
#include "acute/triangle.hpp"

namespace acute {

// Element of GL(2,Z), entries row-major. Construction checks ad - bc = +-1.
class UnimodularMatrix {
public:
    UnimodularMatrix() = default; // identity
    UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }
    int det() const noexcept { return det_; }

    UnimodularMatrix negated() const;
    // Representative of {g, -g} whose first nonzero entry is positive.
    UnimodularMatrix sign_normalized() const;
    bool equal_up_to_sign(const UnimodularMatrix& other) const;

    static UnimodularMatrix identity() { return {}; }
    static UnimodularMatrix S() { return {0, -1, 1, 0}; }
    static UnimodularMatrix T() { return {1, 1, 0, 1}; }
    static UnimodularMatrix T_inv() { return {1, -1, 0, 1}; }
    static UnimodularMatrix R() { return {-1, 0, 0, 1}; }
    static UnimodularMatrix T_pow(std::int64_t n) { return {1, n, 0, 1}; }

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
    friend auto operator<=>(const UnimodularMatrix& x, const UnimodularMatrix& y) {
        return std::tie(x.a_, x.b_, x.c_, x.d_) <=> std::tie(y.a_, y.b_, y.c_, y.d_);
    }

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
    int det_ = 1;
};

// Matrix product g * h. Throws IntegerOverflow when an entry leaves int64.
UnimodularMatrix compose(const UnimodularMatrix& g, const UnimodularMatrix& h);
UnimodularMatrix inverse(const UnimodularMatrix& g);

// z -> (az + b)/(cz + d) for det +1, and the same map applied to conj(z) for
// det -1, so every element keeps the upper half-plane.
ModuliPoint act(const UnimodularMatrix& g, ModuliPoint z);
Complex act_raw(const UnimodularMatrix& g, Complex z);

// "[[a,b],[c,d]]"
std::string format_matrix(const UnimodularMatrix& g);
UnimodularMatrix parse_matrix(std::string_view text);
// Words over {S, T, t, R} with t = T^-1, read as a left-to-right product.
UnimodularMatrix parse_word(std::string_view word);
// Either form, picked by the leading character.
UnimodularMatrix parse_group_element(std::string_view text);

struct ReductionResult {
    ModuliPoint point;
    UnimodularMatrix witness; // witness applied to the input gives point
};

// Canonical representative in the strict fundamental domain of SL(2,Z):
// |z| >= 1, -1/2 <= re(z) < 1/2, with the left half of the unit arc kept.
ReductionResult reduce_sl2z(ModuliPoint z, const Tolerances& tol = default_tolerances);

// reduce_sl2z followed by the reflection z -> -conj(z) when re < 0; the result
// lies in 0 <= re <= 1/2, |z| >= 1 and the witness may have det -1.
ReductionResult canonicalize_gl2z(ModuliPoint z, const Tolerances& tol = default_tolerances);

bool equivalent_sl2z(ModuliPoint z1, ModuliPoint z2, const Tolerances& tol = default_tolerances);

// Coordinatewise absolute comparison.
bool close(Complex z1, Complex z2, double eps);

} // namespace acute
