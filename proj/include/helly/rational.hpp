#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "helly/error.hpp"

namespace helly {

using Rational = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;

/// Parse "p", "-p" or "p/q". Used for all JSON rational fields.
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(cpp_int(s));
        cpp_int num(s.substr(0, slash));
        cpp_int den(s.substr(slash + 1));
        require(den != 0, Errc::BadParams, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        fail(Errc::IoError, "bad rational '" + s + "': " + e.what());
    }
}

/// Render as "p" when integral, "p/q" otherwise (always reduced).
inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace helly
