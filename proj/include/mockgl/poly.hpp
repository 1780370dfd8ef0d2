#pragma once

#include "mockgl/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mgl {

/// Dense integer polynomial, coefficients from degree 0 upward, no trailing zeros.
using UPoly = std::vector<Int>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
Int lead(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Int& s);
UPoly pow(const UPoly& a, int e);
UPoly derivative(const UPoly& a);
Int content(const UPoly& a);
/// Primitive part with positive leading coefficient.
UPoly primitive(const UPoly& a);
/// Exact quotient a/b over Z, or false when b does not divide a.
bool divide_exact(const UPoly& a, const UPoly& b, UPoly& q);
UPoly gcd(const UPoly& a, const UPoly& b);
/// t^deg * p(1/t)
UPoly reverse(const UPoly& a);
Int eval(const UPoly& p, const Int& x);
Rat eval(const UPoly& p, const Rat& x);
std::string to_text(const UPoly& p, const std::string& var = "t");

}  // namespace upoly

/// Factorization of a nonzero integer polynomial into content times primitive irreducibles
/// with positive leading coefficients.
struct Factorization {
    Int unit;  // signed content
    std::vector<std::pair<UPoly, int>> factors;
};

Factorization factor(const UPoly& p);

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const Int& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const Int& c, int k);
    static LaurentPoly from_upoly(const UPoly& p, int shift = 0);
    /// (t - 1)
    static LaurentPoly t_minus_one();

    bool is_zero() const { return c_.empty(); }
    int low() const;
    int high() const;
    Int coeff(int k) const;
    const std::map<int, Int>& terms() const { return c_; }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shift(int k) const;
    /// p(1/t)
    LaurentPoly invert_variable() const;
    /// Coefficients from low() to high(); the zero polynomial gives an empty vector.
    UPoly to_upoly() const;
    Int eval(const Int& t) const;  // requires low() >= 0 or t = +-1
    Rat eval(const Rat& t) const;

    std::string to_text() const;

private:
    void set(int k, const Int& v);
    std::map<int, Int> c_;
};

/// p = sign * t^shift * (t-1)^ell * core
struct NormalForm {
    LaurentPoly core;
    int shift = 0;
    int ell = 0;
    int sign = 1;
};

NormalForm normalize(const LaurentPoly& p);
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);
int span(const LaurentPoly& p);

struct FoxMilnorResult {
    bool passes = false;
    LaurentPoly witness;  // f with core = f(t) f(1/t) up to units, when passes
    std::string reason;
};

FoxMilnorResult fox_milnor(const LaurentPoly& p);

/// Parses text such as "3t^2 - 2t + 3" or "t^-1 + 1".
LaurentPoly parse_laurent(const std::string& text);

}  // namespace mgl
