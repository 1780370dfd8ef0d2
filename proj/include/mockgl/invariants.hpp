#pragma once

#include "mockgl/poly.hpp"
#include "mockgl/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mgl {

/// det(tA - A^T); the 0x0 matrix gives 1.
LaurentPoly alexander(const MockSeifertMatrix& a);
LaurentPoly alexander(const IntMatrix& a);
/// Text of the normal-form core, "0" for the zero polynomial.
std::string normalize_text(const LaurentPoly& p);

struct GLInvariants {
    int sig_part = 0;
    std::optional<Rat> sigma;  // sig_part + e/2 when the Euler number is known
    Rat det = 0;               // |det G|
    int nullity = 0;
};

GLInvariants gl_invariants(const MockSeifertMatrix& a);

/// The point (a + b i)/c on the unit circle, a^2 + b^2 = c^2, c > 0, gcd(a,b,c) = 1.
struct CirclePoint {
    Int a = -1, b = 0, c = 1;

    static CirclePoint make(const Int& a, const Int& b, const Int& c);
    static CirclePoint minus_one() { return {-1, 0, 1}; }
    /// ((v^2 - u^2) + 2uv i)/(u^2 + v^2)
    static CirclePoint pythagorean(const Int& u, const Int& v);
    bool is_one() const { return a == c && b == 0; }
    CirclePoint conj() const { return {a, -b, c}; }
    /// t + 1/t = 2a/c
    Rat x() const { return Rat(2 * a, c); }
    double angle() const;
    std::string to_text() const;
    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

CirclePoint parse_circle_point(const std::string& text);

struct LtValue {
    int sig_part = 0;  // sig(H_omega)
    int nullity = 0;   // nullity(H_omega); nonzero exactly at a jump point
    std::optional<Rat> sigma;
    bool singular() const { return nullity != 0; }
};

/// Signature of H_omega = (1-omega)A + (1-conj omega)A^T via its real form. Throws for omega = 1.
LtValue lt_signature(const MockSeifertMatrix& a, const CirclePoint& omega);

struct JumpPoint {
    /// Irreducible integer polynomial in x = t + 1/t with this point as a root.
    UPoly minpoly;
    Rat lo, hi;  // isolating interval for x; lo == hi when x is rational
    int half = 1;  // +1 upper half plane, -1 lower, 0 for omega = -1
    std::optional<CirclePoint> exact;  // when the point itself has rational coordinates
    int multiplicity = 1;  // multiplicity of the factor in the core of Delta
    bool rational() const { return lo == hi; }
    std::string to_text() const;
};

struct SignatureFunction {
    /// Jump points in counterclockwise order starting from omega = 1.
    std::vector<JumpPoint> jumps;
    /// Value of sig(H_omega) on each open arc; arc k lies between jumps k-1 and k.
    std::vector<int> arc_values;
    std::vector<CirclePoint> samples;
    std::optional<Rat> euler_correction;  // e/2
    bool degenerate = false;  // Delta vanishes identically
    bool all_zero() const;
    bool any_nonzero() const { return !all_zero(); }
};

SignatureFunction signature_function(const MockSeifertMatrix& a);

/// Mean of the one-sided limits plus e/2 (when known).
Rat average_signature(const MockSeifertMatrix& a, const CirclePoint& omega);

struct DeltaOneCheck {
    enum class Kind { OkOdd, OkEvenSquare, Violation } kind = Kind::OkOdd;
    Int value;
};

std::string to_string(DeltaOneCheck::Kind k);
DeltaOneCheck delta_one_check(const MockSeifertMatrix& a);

struct Bounds {
    int crosscap_lower = 0;
    std::optional<Rat> genus_lower;
    bool alexander_zero = false;
};

Bounds bounds(const MockSeifertMatrix& a);

namespace detail {
/// g with f(t) = t^m g(t + 1/t) for a palindromic f of degree 2m.
UPoly reciprocal_to_x(const UPoly& f);
/// Disjoint isolating intervals (lo, hi) for the real roots of squarefree g in (-2, 2).
std::vector<std::pair<Rat, Rat>> isolate_roots(const UPoly& g);
}  // namespace detail

}  // namespace mgl
