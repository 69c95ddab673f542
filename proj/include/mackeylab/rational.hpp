#pragma once

// Exact rational scalars. Everything downstream (matrices, Mackey functors,
// chain complexes, polynomial rings) computes over these; there is no
// floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mackeylab {

using Integer = boost::multiprecision::cpp_int;

// Always normalized: gcd(|num|, den) = 1, den > 0. cpp_rational maintains
// this eagerly, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q" (denominator always present, e.g. "3/1").
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" or a bare integer "p".
inline Rational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("parse_fraction: denominator must be positive: " + s);
    return Rational(num, den);
}

}  // namespace mackeylab
