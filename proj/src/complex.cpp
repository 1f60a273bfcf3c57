#include "acute/complex.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "acute/error.hpp"

namespace acute {

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw Error(ErrorCode::ParseError, "malformed complex literal '" + std::string(text) + "'");
}

// Length of the unsigned decimal number (digits, optional fraction, optional
// exponent) at the start of s, or 0 if there is none.
std::size_t scan_number(std::string_view s) {
    std::size_t i = 0;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    }
    if (digits == 0) return 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        std::size_t exp_digits = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) { ++j; ++exp_digits; }
        if (exp_digits == 0) return 0;
        i = j;
    }
    return i;
}

double to_double(std::string_view s, std::string_view whole) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) bad_literal(whole);
    return value;
}

} // namespace

bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Complex parse_complex(std::string_view text) {
    std::string_view s = text;
    bool re_negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        re_negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const std::size_t re_len = scan_number(s);
    if (re_len == 0 || re_len >= s.size()) bad_literal(text);
    const std::string_view re_text = s.substr(0, re_len);
    s.remove_prefix(re_len);

    if (s.front() != '+' && s.front() != '-') bad_literal(text);
    const bool im_negative = s.front() == '-';
    s.remove_prefix(1);
    const std::size_t im_len = scan_number(s);
    if (im_len == 0 || im_len + 1 != s.size() || s.back() != 'i') bad_literal(text);
    const std::string_view im_text = s.substr(0, im_len);

    double re = to_double(re_text, text);
    double im = to_double(im_text, text);
    return {re_negative ? -re : re, im_negative ? -im : im};
}

std::string format_real(double x) {
    if (x == 0.0) x = 0.0; // drops the sign of -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
    std::string out = format_real(z.real());
    double im = z.imag();
    if (im == 0.0) im = 0.0;
    if (std::signbit(im)) {
        out += '-';
        out += format_real(-im);
    } else {
        out += '+';
        out += format_real(im);
    }
    out += 'i';
    return out;
}

} // namespace acute
