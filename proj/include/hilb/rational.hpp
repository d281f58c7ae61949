#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hilb::exact {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, canonical form gcd(|num|,den)=1, den>0.
// cpp_rational maintains exactly that invariant on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rat(long long n) { return Rational(n); }

inline Rational rat(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    return Rational(n, d);
}

inline Rational rat_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("rational: 0^negative");
        return rat_pow(Rational(1) / base, -e);
    }
    Rational acc(1), b = base;
    long long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
}

inline long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

}  // namespace hilb::exact
