#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "p1b/errors.hpp"

namespace p1b {

// Exact arithmetic everywhere: the whole library computes over Q and
// refuses to touch floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// C(n, k) as an exact integer; zero outside the Pascal triangle.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r(1);
    for (long i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw Error("rat_pow: zero to a negative power");
        return Rat(0);
    }
    Rat base = e > 0 ? q : Rat(1) / q;
    long n = e > 0 ? e : -e;
    Rat r(1);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// "3/4", "-2", "7", with optional whitespace around each part. Used by
// the CLI when reading rational scalars.
inline Rat parse_rat(const std::string& s) {
    auto trim = [](const std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(trim(s)));
        Int num(trim(s.substr(0, slash)));
        Int den(trim(s.substr(slash + 1)));
        if (den == 0) throw Error("parse_rat: zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw Error("parse_rat: cannot parse '" + s + "'");
    }
}

inline std::string rat_str(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

} // namespace p1b
