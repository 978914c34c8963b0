#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bnlab/errors.hpp"

namespace bnlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

[[nodiscard]] inline std::string render(const Int& n) { return n.str(); }

/// Canonical rendering: reduced "num/den", bare "num" when the denominator is 1.
[[nodiscard]] inline std::string render(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

[[nodiscard]] inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

/// Accepts "n" or "n/d" in base 10; anything else is a ParseError.
[[nodiscard]] inline Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: '" + s + "'");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

}  // namespace bnlab
