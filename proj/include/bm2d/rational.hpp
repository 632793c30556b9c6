#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "bm2d/errors.hpp"

namespace bm2d {

// Arbitrary-precision rational. cpp_rational keeps itself in canonical
// (reduced, positive-denominator) form.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational rational(long long num, long long den = 1) { return Rational(num, den); }

/// Nearest rational to x with denominator at most `max_den`, by walking the
/// continued-fraction convergents.
inline Rational rational_from_double(double x, std::uint64_t max_den = 1000000) {
    if (!std::isfinite(x)) throw DomainError("rational_from_double: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // convergents p/q of the continued fraction of v
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        BigInt a = static_cast<std::int64_t>(fl);
        BigInt p2 = a * p1 + p0;
        BigInt q2 = a * q1 + q0;
        if (q2 > max_den) {
            // best convergent within the cap is p1/q1; a semiconvergent could be
            // closer but the cap policy only needs a bounded-denominator round
            break;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

/// Parses "p/q" or a plain integer string.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("parse_rational: zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("parse_rational: malformed rational '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Scalar-generic helpers so geometry code can be written once for both
// Rational and double.
template <class S> inline S scalar_abs(const S& x) { return x < S(0) ? S(-x) : x; }

template <class S> struct scalar_traits;

template <> struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_fraction(long long p, long long q) { return double(p) / double(q); }
};

template <> struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_fraction(long long p, long long q) { return Rational(p, q); }
};

} // namespace bm2d
