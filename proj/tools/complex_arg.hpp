#pragma once

#include <complex>
#include <optional>
#include <regex>
#include <string>

namespace korenblum::cli {

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i", "a+i"). Real and imaginary
/// parts are plain decimal numbers with optional exponent; the imaginary part
/// must end in 'i'. Anything else is rejected.
inline std::optional<std::complex<double>> parse_complex(const std::string& text) {
    static const std::string number = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex real_then_imag("^([+-]?" + number + ")(?:([+-])(" + number + ")?i)?$");
    static const std::regex imag_only("^([+-]?)(" + number + ")?i$");

    std::smatch m;
    if (std::regex_match(text, m, real_then_imag)) {
        const double re = std::stod(m[1].str());
        double im = 0.0;
        if (m[2].matched) im = (m[2].str() == "-" ? -1.0 : 1.0) * (m[3].matched ? std::stod(m[3].str()) : 1.0);
        return std::complex<double>(re, im);
    }
    if (std::regex_match(text, m, imag_only)) {
        const double magnitude = m[2].matched ? std::stod(m[2].str()) : 1.0;
        return std::complex<double>(0.0, m[1].str() == "-" ? -magnitude : magnitude);
    }
    return std::nullopt;
}

}  // namespace korenblum::cli
