/*
Copyright 2026 The qft Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace qft
{

namespace detail
{
inline void trim_zeros(std::string& mantissa)
{
    if (mantissa.find('.') == std::string::npos) return;
    while (!mantissa.empty() && mantissa.back() == '0') mantissa.pop_back();
    if (!mantissa.empty() && mantissa.back() == '.') mantissa.pop_back();
}
}  // namespace detail

/**
 * Text form used by every CSV/SVG writer: 12 significant digits, fixed
 * notation for 1e-4 <= |x| < 1e6 and lowercase scientific otherwise, with
 * trailing zeros dropped.
 */
inline std::string format_real(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    const std::string sci{buf};
    const auto epos = sci.find('e');
    const int exponent = std::atoi(sci.c_str() + epos + 1);

    if (exponent >= -4 && exponent < 6) {
        std::snprintf(buf, sizeof buf, "%.*f", 11 - exponent, x);
        std::string out{buf};
        detail::trim_zeros(out);
        return out;
    }
    std::string mantissa = sci.substr(0, epos);
    detail::trim_zeros(mantissa);
    std::snprintf(buf, sizeof buf, "e%s%02d", exponent < 0 ? "-" : "+", std::abs(exponent));
    return mantissa + buf;
}

/** Round-trip form for JSON values: 17 significant digits. */
inline std::string format_json_real(double x)
{
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/** Fixed six-decimal field used in output file names. */
inline std::string format_fixed6(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace qft
