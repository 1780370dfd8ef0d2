#include "mockgl/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace mgl {

LaurentPoly alexander(const IntMatrix& a) {
    const int n = a.rows();
    if (n == 0) return LaurentPoly::constant(1);
    const IntMatrix at = a.transpose();
    // det(tA - A^T) has degree <= n; interpolate through t = 0..n
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= n; ++k) {
        IntMatrix m = a * Int(k) - at;
        xs.emplace_back(k);
        ys.emplace_back(det(m));
    }
    // Newton divided differences
    std::vector<Rat> dd = ys;
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<Rat> poly{dd[n]};
    for (int i = n - 1; i >= 0; --i) {
        // poly = poly * (t - xs[i]) + dd[i]
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    UPoly out;
    for (const auto& c : poly) {
        if (denominator(c) != 1) throw std::logic_error("non-integral Alexander coefficient");
        out.push_back(numerator(c));
    }
    upoly::trim(out);
    return LaurentPoly::from_upoly(out);
}

LaurentPoly alexander(const MockSeifertMatrix& a) { return alexander(a.entries); }

std::string normalize_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    return normalize(p).core.to_text();
}

GLInvariants gl_invariants(const MockSeifertMatrix& a) {
    GLInvariants g;
    const RatMatrix sym = a.symmetric_part();
    const Inertia in = inertia(sym);
    g.sig_part = in.signature();
    g.nullity = in.zero;
    const Rat d = a.size() == 0 ? Rat(1) : det(sym);
    g.det = d < 0 ? Rat(-d) : d;
    if (a.euler) g.sigma = Rat(g.sig_part) + Rat(*a.euler, 2);
    return g;
}

CirclePoint CirclePoint::make(const Int& a, const Int& b, const Int& c) {
    if (c == 0) throw PreconditionError("circle point needs a nonzero denominator");
    Int x = a, y = b, z = c;
    if (z < 0) {
        x = -x;
        y = -y;
        z = -z;
    }
    if (x * x + y * y != z * z) throw PreconditionError("point is not on the unit circle");
    const Int g = gcd(gcd(x, y), z);
    return {x / g, y / g, z / g};
}

CirclePoint CirclePoint::pythagorean(const Int& u, const Int& v) {
    return make(v * v - u * u, 2 * u * v, u * u + v * v);
}

double CirclePoint::angle() const {
    double th = std::atan2(b.convert_to<double>(), a.convert_to<double>());
    if (th < 0) th += 2 * M_PI;
    return th;
}

std::string CirclePoint::to_text() const {
    if (b == 0) return c == 1 ? a.str() : a.str() + "/" + c.str();
    std::string s = "(" + a.str() + (b < 0 ? "-" : "+") + iabs(b).str() + "i)";
    return c == 1 ? s : s + "/" + c.str();
}

CirclePoint parse_circle_point(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    static const std::regex triple(R"(^(-?\d+),(-?\d+),(-?\d+)$)");
    static const std::regex complex(R"(^\(?(-?\d+)([+-])(\d*)i\)?(?:/(\d+))?$)");
    static const std::regex real(R"(^(-?\d+)(?:/(\d+))?$)");
    std::smatch m;
    if (std::regex_match(s, m, triple)) return CirclePoint::make(Int(m[1].str()), Int(m[2].str()), Int(m[3].str()));
    if (std::regex_match(s, m, complex)) {
        Int b = m[3].str().empty() ? Int(1) : Int(m[3].str());
        if (m[2].str() == "-") b = -b;
        const Int c = m[4].matched ? Int(m[4].str()) : Int(1);
        return CirclePoint::make(Int(m[1].str()), b, c);
    }
    if (std::regex_match(s, m, real)) {
        const Int c = m[2].matched ? Int(m[2].str()) : Int(1);
        return CirclePoint::make(Int(m[1].str()), 0, c);
    }
    throw ParseError("cannot parse circle point '" + text + "'");
}

LtValue lt_signature(const MockSeifertMatrix& a, const CirclePoint& omega) {
    if (omega.is_one()) throw PreconditionError("signature is undefined at omega = 1");
    if (omega.a * omega.a + omega.b * omega.b != omega.c * omega.c) throw PreconditionError("point is not on the unit circle");
    const int n = a.size();
    LtValue out;
    if (a.euler) out.sigma = Rat(*a.euler, 2);
    if (n == 0) return out;
    const IntMatrix& A = a.entries;
    const IntMatrix At = A.transpose();
    const Int ca = omega.c - omega.a;
    const IntMatrix R = (A + At) * ca;
    const IntMatrix I = (At - A) * omega.b;
    RatMatrix big(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            big(i, j) = R(i, j);
            big(n + i, n + j) = R(i, j);
            big(i, n + j) = -I(i, j);
            big(n + i, j) = I(i, j);
        }
    const Inertia in = inertia(big);
    out.sig_part = in.signature() / 2;
    out.nullity = in.zero / 2;
    if (out.sigma) *out.sigma += out.sig_part;
    return out;
}

bool SignatureFunction::all_zero() const {
    return std::all_of(arc_values.begin(), arc_values.end(), [](int v) { return v == 0; });
}

std::string JumpPoint::to_text() const {
    if (exact) return exact->to_text();
    std::string s = "root of " + upoly::to_text(minpoly, "x") + " in (" + to_string(lo) + ", " + to_string(hi) + ")";
    return s + (half > 0 ? ", upper" : ", lower");
}

namespace {

using RPoly = std::vector<Rat>;

void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly to_rpoly(const UPoly& p) {
    RPoly r(p.begin(), p.end());
    rtrim(r);
    return r;
}

Rat reval(const RPoly& p, const Rat& x) {
    Rat v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

RPoly rrem(RPoly a, const RPoly& b) {
    rtrim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const Rat f = a.back() / b.back();
        const int shift = static_cast<int>(a.size()) - 1 - db;
        for (int k = 0; k <= db; ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        rtrim(a);
    }
    return a;
}

std::vector<RPoly> sturm_chain(const UPoly& g) {
    std::vector<RPoly> ch{to_rpoly(g), to_rpoly(upoly::derivative(g))};
    while (!ch.back().empty()) {
        RPoly r = rrem(ch[ch.size() - 2], ch.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        ch.push_back(std::move(r));
    }
    return ch;
}

int variations(const std::vector<RPoly>& ch, const Rat& x) {
    int v = 0, last = 0;
    for (const auto& p : ch) {
        const Rat y = reval(p, x);
        const int s = y > 0 ? 1 : (y < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int rsign(const UPoly& g, const Rat& x) {
    const Rat y = upoly::eval(g, x);
    return y > 0 ? 1 : (y < 0 ? -1 : 0);
}

// Halves an isolating interval of a simple irrational root.
void refine(const UPoly& g, Rat& lo, Rat& hi) {
    const Rat mid = (lo + hi) / 2;
    if (rsign(g, mid) == 0) throw std::logic_error("unexpected rational root while refining");
    if (rsign(g, lo) * rsign(g, mid) < 0)
        hi = mid;
    else
        lo = mid;
}

// A rational s > 0 with lo2 < s^2 < hi2 (hi2 absent means unbounded).
Rat between_squares(const Rat& lo2, const std::optional<Rat>& hi2) {
    Rat lo = 0, hi = 1;
    while (hi * hi <= lo2) hi *= 2;
    for (;;) {
        if (hi * hi > lo2 && (!hi2 || hi * hi < *hi2)) return hi;
        const Rat mid = (lo + hi) / 2;
        if (mid * mid <= lo2)
            lo = mid;
        else if (hi2 && mid * mid >= *hi2)
            hi = mid;
        else
            return mid;
    }
}

// Upper half-plane Pythagorean point with x = t + 1/t strictly inside (xa, xb), -2 <= xa < xb <= 2.
CirclePoint sample_between(const Rat& xa, const Rat& xb) {
    auto s2 = [](const Rat& x) { return (Rat(2) - x) / (Rat(2) + x); };
    const Rat lo2 = xb >= 2 ? Rat(0) : s2(xb);
    std::optional<Rat> hi2;
    if (xa > -2) hi2 = s2(xa);
    const Rat s = between_squares(lo2, hi2);
    return CirclePoint::pythagorean(numerator(s), denominator(s));
}

struct RawJump {
    UPoly g;
    Rat lo, hi;
    int mult;
};

}  // namespace

namespace detail {

UPoly reciprocal_to_x(const UPoly& f) {
    const int d = upoly::degree(f);
    if (d % 2 != 0) throw std::invalid_argument("reciprocal polynomial of odd degree");
    const int m = d / 2;
    // D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}; t^j + t^-j = D_j(x)
    std::vector<UPoly> D{{2}, {0, 1}};
    for (int k = 1; k < m; ++k) D.push_back(upoly::sub(upoly::mul({0, 1}, D[k]), D[k - 1]));
    UPoly g{f[m]};
    for (int j = 1; j <= m; ++j) g = upoly::add(g, upoly::scale(D[j], f[m + j]));
    upoly::trim(g);
    return g;
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const UPoly& g) {
    std::vector<std::pair<Rat, Rat>> out;
    if (upoly::degree(g) == 1) {
        const Rat r = ratio(-g[0], g[1]);
        if (r > -2 && r < 2) out.emplace_back(r, r);
        return out;
    }
    const auto ch = sturm_chain(g);
    std::vector<std::pair<Rat, Rat>> todo{{Rat(-2), Rat(2)}};
    while (!todo.empty()) {
        auto [lo, hi] = todo.back();
        todo.pop_back();
        const int cnt = variations(ch, lo) - variations(ch, hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        for (int k = 3; upoly::eval(g, mid) == 0; ++k) mid = lo + (hi - lo) / k;
        todo.emplace_back(lo, mid);
        todo.emplace_back(mid, hi);
    }
    return out;
}

}  // namespace detail

SignatureFunction signature_function(const MockSeifertMatrix& a) {
    SignatureFunction sf;
    if (a.euler) sf.euler_correction = Rat(*a.euler, 2);
    const LaurentPoly delta = alexander(a);
    if (delta.is_zero()) {
        sf.degenerate = true;
        sf.samples.push_back(CirclePoint::minus_one());
        sf.arc_values.push_back(lt_signature(a, CirclePoint::minus_one()).sig_part);
        return sf;
    }
    const UPoly core = normalize(delta).core.to_upoly();
    std::vector<RawJump> raw;
    std::optional<int> minus_one_mult;
    for (const auto& [f, mult] : factor(core).factors) {
        const int d = upoly::degree(f);
        if (d == 1) {
            if (f[0] == 1 && f[1] == 1) minus_one_mult = mult;
            continue;
        }
        if (d % 2 != 0 || upoly::reverse(f) != f) continue;
        const UPoly g = detail::reciprocal_to_x(f);
        for (const auto& [lo, hi] : detail::isolate_roots(g)) raw.push_back({g, lo, hi, mult});
    }
    // make the isolating intervals pairwise disjoint
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < raw.size(); ++i)
            for (std::size_t j = i + 1; j < raw.size(); ++j) {
                auto& p = raw[i];
                auto& q = raw[j];
                if (!(p.hi >= q.lo && q.hi >= p.lo)) continue;
                if (p.lo != p.hi) refine(p.g, p.lo, p.hi);
                if (q.lo != q.hi) refine(q.g, q.lo, q.hi);
                changed = true;
            }
    }
    for (auto& r : raw)
        while (r.lo != r.hi && (r.lo <= -2 || r.hi >= 2)) refine(r.g, r.lo, r.hi);
    std::sort(raw.begin(), raw.end(), [](const RawJump& p, const RawJump& q) { return p.lo > q.lo; });

    std::vector<JumpPoint> upper;
    for (const auto& r : raw) {
        JumpPoint j;
        j.minpoly = r.g;
        j.lo = r.lo;
        j.hi = r.hi;
        j.half = 1;
        j.multiplicity = r.mult;
        if (r.lo == r.hi) {
            const Int p = numerator(r.lo), q = denominator(r.lo);
            const Int s2 = 4 * q * q - p * p;
            if (is_square(s2)) j.exact = CirclePoint::make(p, isqrt(s2), 2 * q);
        }
        upper.push_back(std::move(j));
    }

    std::vector<CirclePoint> up_samples;
    Rat prev_lo = 2;
    for (const auto& j : upper) {
        up_samples.push_back(sample_between(j.hi, prev_lo));
        prev_lo = j.lo;
    }
    if (minus_one_mult) up_samples.push_back(sample_between(Rat(-2), prev_lo));
    std::vector<int> up_values;
    for (const auto& w : up_samples) {
        const LtValue v = lt_signature(a, w);
        if (v.singular()) throw std::logic_error("sample point landed on a jump");
        up_values.push_back(v.sig_part);
    }

    sf.jumps = upper;
    if (minus_one_mult) {
        JumpPoint j;
        j.minpoly = {2, 1};
        j.lo = j.hi = -2;
        j.half = 0;
        j.exact = CirclePoint::minus_one();
        j.multiplicity = *minus_one_mult;
        sf.jumps.push_back(j);
    }
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
        JumpPoint j = *it;
        j.half = -1;
        if (j.exact) j.exact = j.exact->conj();
        sf.jumps.push_back(j);
    }
    sf.samples = up_samples;
    sf.arc_values = up_values;
    if (!minus_one_mult) {
        sf.samples.push_back(CirclePoint::minus_one());
        sf.arc_values.push_back(lt_signature(a, CirclePoint::minus_one()).sig_part);
    }
    for (int k = static_cast<int>(up_samples.size()) - 1; k >= 0; --k) {
        sf.samples.push_back(up_samples[k].conj());
        sf.arc_values.push_back(up_values[k]);
    }
    return sf;
}

Rat average_signature(const MockSeifertMatrix& a, const CirclePoint& omega) {
    const LtValue v = lt_signature(a, omega);
    Rat corr = a.euler ? Rat(*a.euler, 2) : Rat(0);
    if (!v.singular()) return Rat(v.sig_part) + corr;
    const SignatureFunction sf = signature_function(a);
    if (sf.degenerate) return Rat(v.sig_part) + corr;
    const int half = omega.b > 0 ? 1 : (omega.b < 0 ? -1 : 0);
    for (std::size_t k = 0; k < sf.jumps.size(); ++k) {
        const auto& j = sf.jumps[k];
        if (j.rational() && j.lo == omega.x() && j.half == half)
            return Rat(sf.arc_values[k] + sf.arc_values[k + 1], 2) + corr;
    }
    throw std::logic_error("singular point not found among the jumps");
}

std::string to_string(DeltaOneCheck::Kind k) {
    switch (k) {
        case DeltaOneCheck::Kind::OkOdd: return "ok_odd";
        case DeltaOneCheck::Kind::OkEvenSquare: return "ok_even_square";
        default: return "violation";
    }
}

DeltaOneCheck delta_one_check(const MockSeifertMatrix& a) {
    DeltaOneCheck r;
    const int n = a.size();
    r.value = n == 0 ? Int(1) : det(IntMatrix(a.entries - a.entries.transpose()));
    if (n % 2 == 1) {
        r.kind = r.value == 0 ? DeltaOneCheck::Kind::OkOdd : DeltaOneCheck::Kind::Violation;
        return r;
    }
    const Int pow2 = Int(1) << n;
    r.kind = is_square(r.value) && r.value % pow2 == 0 ? DeltaOneCheck::Kind::OkEvenSquare
                                                       : DeltaOneCheck::Kind::Violation;
    return r;
}

Bounds bounds(const MockSeifertMatrix& a) {
    Bounds b;
    const LaurentPoly delta = alexander(a);
    if (delta.is_zero()) {
        b.alexander_zero = true;
        return b;
    }
    b.crosscap_lower = span(delta);
    if (a.type() == FormType::Even) b.genus_lower = Rat(b.crosscap_lower, 2);
    return b;
}

}  // namespace mgl
