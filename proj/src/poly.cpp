#include "mockgl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mgl {
namespace upoly {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Int lead(const UPoly& p) { return p.empty() ? Int(0) : p.back(); }

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

UPoly scale(const UPoly& a, const Int& s) {
    UPoly r = a;
    for (auto& x : r) x *= s;
    trim(r);
    return r;
}

UPoly pow(const UPoly& a, int e) {
    UPoly r{1};
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

UPoly derivative(const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

Int content(const UPoly& a) {
    Int g = 0;
    for (const auto& x : a) g = mgl::gcd(g, x);
    return g;
}

UPoly primitive(const UPoly& a) {
    if (a.empty()) return {};
    Int c = content(a);
    if (a.back() < 0) c = -c;
    UPoly r = a;
    for (auto& x : r) x /= c;
    return r;
}

bool divide_exact(const UPoly& a, const UPoly& b, UPoly& q) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    q.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    UPoly r = a;
    q.assign(a.size() - b.size() + 1, Int(0));
    const Int lb = b.back();
    for (int k = static_cast<int>(a.size() - b.size()); k >= 0; --k) {
        const Int& top = r[k + b.size() - 1];
        if (top == 0) continue;
        if (top % lb != 0) return false;
        Int f = top / lb;
        q[k] = f;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= f * b[j];
    }
    trim(r);
    trim(q);
    return r.empty();
}

static UPoly pseudo_rem(UPoly a, const UPoly& b) {
    const int db = degree(b);
    const Int lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const int shift = degree(a) - db;
        const Int la = a.back();
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
    if (a0.empty()) return primitive(b0);
    if (b0.empty()) return primitive(a0);
    Int c = mgl::gcd(content(a0), content(b0));
    UPoly a = primitive(a0), b = primitive(b0);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = pseudo_rem(a, b);
        a = b;
        b = primitive(r);
    }
    return scale(primitive(a), c);
}

UPoly reverse(const UPoly& a) {
    UPoly r(a.rbegin(), a.rend());
    trim(r);
    return r;
}

Int eval(const UPoly& p, const Int& x) {
    Int v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

Rat eval(const UPoly& p, const Rat& x) {
    Rat v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

std::string to_text(const UPoly& p, const std::string& var) {
    std::string s = LaurentPoly::from_upoly(p).to_text();
    if (var != "t" && !var.empty()) std::replace(s.begin(), s.end(), 't', var[0]);
    return s;
}

}  // namespace upoly

LaurentPoly LaurentPoly::monomial(const Int& c, int k) {
    LaurentPoly p;
    p.set(k, c);
    return p;
}

LaurentPoly LaurentPoly::from_upoly(const UPoly& q, int shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < q.size(); ++i) p.set(static_cast<int>(i) + shift, q[i]);
    return p;
}

LaurentPoly LaurentPoly::t_minus_one() { return from_upoly({-1, 1}); }

void LaurentPoly::set(int k, const Int& v) {
    if (v == 0)
        c_.erase(k);
    else
        c_[k] = v;
}

int LaurentPoly::low() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no degree");
    return c_.begin()->first;
}

int LaurentPoly::high() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no degree");
    return c_.rbegin()->first;
}

Int LaurentPoly::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.c_) kv.second = -kv.second;
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, v] : b.c_) r.set(k, r.coeff(k) + v);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, Int> acc;
    for (const auto& [i, x] : a.c_)
        for (const auto& [j, y] : b.c_) acc[i + j] += x * y;
    LaurentPoly r;
    for (const auto& [k, v] : acc) r.set(k, v);
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r;
    for (const auto& [d, v] : c_) r.c_[d + k] = v;
    return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
    LaurentPoly r;
    for (const auto& [d, v] : c_) r.c_[-d] = v;
    return r;
}

UPoly LaurentPoly::to_upoly() const {
    if (c_.empty()) return {};
    UPoly u(high() - low() + 1);
    for (const auto& [d, v] : c_) u[d - low()] = v;
    return u;
}

Int LaurentPoly::eval(const Int& t) const {
    if (c_.empty()) return 0;
    if (low() < 0 && t != 1 && t != -1) throw std::domain_error("integer evaluation of a Laurent polynomial with negative powers");
    Int v = 0;
    for (const auto& [d, c] : c_) {
        Int term = c;
        const int e = d < 0 ? -d : d;
        for (int i = 0; i < e; ++i) term *= t;
        v += term;
    }
    return v;
}

Rat LaurentPoly::eval(const Rat& t) const {
    Rat v = 0;
    for (const auto& [d, c] : c_) {
        Rat term = Rat(c);
        if (d >= 0)
            for (int i = 0; i < d; ++i) term *= t;
        else
            for (int i = 0; i < -d; ++i) term /= t;
        v += term;
    }
    return v;
}

std::string LaurentPoly::to_text() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const int d = it->first;
        Int c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << "t";
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

NormalForm normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
    NormalForm nf;
    nf.shift = p.low();
    UPoly u = p.to_upoly();
    const UPoly t1{-1, 1};
    for (;;) {
        UPoly q;
        if (upoly::eval(u, Int(1)) != 0 || !upoly::divide_exact(u, t1, q)) break;
        u = q;
        ++nf.ell;
    }
    if (u.back() < 0) {
        nf.sign = -1;
        u = upoly::scale(u, Int(-1));
    }
    nf.core = LaurentPoly::from_upoly(u);
    return nf;
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize(a).core == normalize(b).core;
}

int span(const LaurentPoly& p) {
    const auto nf = normalize(p);
    return nf.core.high() - nf.core.low();
}

FoxMilnorResult fox_milnor(const LaurentPoly& p) {
    const NormalForm nf = normalize(p);
    const UPoly core = nf.core.to_upoly();
    FoxMilnorResult res;
    const Factorization fz = factor(core);
    const Int unit = iabs(fz.unit);
    if (!is_square(unit)) {
        res.reason = "content " + unit.str() + " is not a perfect square";
        return res;
    }
    UPoly witness{isqrt(unit)};
    std::vector<bool> used(fz.factors.size(), false);
    for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        if (used[i]) continue;
        const auto& [h, m] = fz.factors[i];
        const UPoly hr = upoly::primitive(upoly::reverse(h));
        if (hr == h) {
            if (m % 2 != 0) {
                res.reason = "self-reciprocal factor " + upoly::to_text(h) + " has odd multiplicity";
                return res;
            }
            witness = upoly::mul(witness, upoly::pow(h, m / 2));
            used[i] = true;
            continue;
        }
        std::size_t partner = fz.factors.size();
        for (std::size_t j = i + 1; j < fz.factors.size(); ++j)
            if (!used[j] && fz.factors[j].first == hr) partner = j;
        if (partner == fz.factors.size() || fz.factors[partner].second != m) {
            res.reason = "factor " + upoly::to_text(h) + " is not matched by its reciprocal";
            return res;
        }
        used[i] = used[partner] = true;
        witness = upoly::mul(witness, upoly::pow(h, m));
    }
    res.passes = true;
    res.witness = LaurentPoly::from_upoly(witness);
    return res;
}

LaurentPoly parse_laurent(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch) || ch == '*') continue;
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 2;
            continue;
        }
        s += static_cast<char>(ch);
    }
    if (s.empty()) throw ParseError("empty polynomial");
    LaurentPoly p;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("expected sign in polynomial at offset " + std::to_string(i));
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        Int c = digits.empty() ? Int(1) : Int(digits);
        int d = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            d = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) e += s[i++];
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                if (e.empty() || e == "-" || e == "+") throw ParseError("bad exponent in polynomial");
                d = std::stoi(e);
            }
        } else if (digits.empty()) {
            throw ParseError("bad polynomial term at offset " + std::to_string(i));
        }
        p = p + LaurentPoly::monomial(c * sign, d);
    }
    return p;
}

}  // namespace mgl
