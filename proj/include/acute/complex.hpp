#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace acute {

using Complex = std::complex<double>;

bool is_finite(Complex z) noexcept;

// Text form "a+bi" / "a-bi". Both parts are required; exponents are allowed.
Complex parse_complex(std::string_view text);

// Shortest decimal form that parses back to the same doubles (never more than
// 17 significant digits). Negative zero prints as "0".
std::string format_complex(Complex z);
std::string format_real(double x);

} // namespace acute
