#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sgn(const Int& a) { return a.sign(); }

inline Int gcd(Int a, Int b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline bool is_odd(const Int& n) { return (iabs(n) & 1) != 0; }

/// floor(a/b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Representative of a mod m in (-m/2, m/2].
inline Int sym_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

inline Int pos_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
}

inline std::int64_t to_i64(const Int& a) {
    if (a > Int(INT64_MAX) || a < Int(INT64_MIN)) throw std::overflow_error("integer does not fit in 64 bits");
    return a.convert_to<std::int64_t>();
}

inline Rat ratio(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    return d < 0 ? Rat(Int(-n), Int(-d)) : Rat(n, d);
}

inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

}  // namespace mgl
