#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace precur {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denom(r) == 1; }

/// n in {0, 1, 2, ...}; throughout this library N includes 0.
inline bool is_natural(const Rational& r) { return is_integer(r) && r >= 0; }

/// r in -N* = {-1, -2, ...}
inline bool is_negative_integer(const Rational& r) { return is_integer(r) && r < 0; }

/// r in -N = {0, -1, -2, ...}
inline bool is_nonpositive_integer(const Rational& r) { return is_integer(r) && r <= 0; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
    return static_cast<long>(numer(r));
}

inline std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

/// Exact square root of a non-negative rational, when it exists.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = exact_isqrt(numer(r));
    if (!n) return std::nullopt;
    auto d = exact_isqrt(denom(r));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

inline bool is_rational_square(const Rational& r) { return exact_sqrt(r).has_value(); }

/// r^e for integer e (negative allowed when r != 0).
inline Rational pow_rational(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("pow_rational: 0 to negative power");
        return Rational(1) / pow_rational(r, -e);
    }
    Rational acc(1), base = r;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// binom(n, k) for integer n >= 0; zero when k < 0 or k > n.
inline Int binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

/// Generalized binom(q, k) for rational q, built by the running product.
inline Rational binomial_rational(const Rational& q, long k) {
    if (k < 0) return 0;
    Rational acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= (q - i);
        acc /= (i + 1);
    }
    return acc;
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
/// Rejects anything else, in particular decimal literals like "0.5".
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto is_int_token = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int_token(s)) bad();
        return Rational(Int(std::string(s)));
    }
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int_token(num) || !is_int_token(den)) bad();
    Int d{std::string(den)};
    if (d == 0) bad();
    return Rational(Int(std::string(num)), d);
}

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace precur
