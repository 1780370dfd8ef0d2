#include "mockgl/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace mgl {
namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

struct Fp {
    u64 p;

    u64 mulm(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
    u64 addm(u64 a, u64 b) const { return (a + b) % p; }
    u64 subm(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 powm(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mulm(r, a);
            a = mulm(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return powm(a, p - 2); }

    void trim(FpPoly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    FpPoly reduce(const UPoly& a) const {
        FpPoly r(a.size());
        const Int P(p);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = pos_mod(a[i], P).convert_to<u64>();
        trim(r);
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = subm(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = addm(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j]));
        trim(r);
        return r;
    }
    void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
        r = a;
        q.clear();
        if (a.size() < b.size()) return;
        q.assign(a.size() - b.size() + 1, 0);
        const u64 li = inv(b.back());
        for (int k = static_cast<int>(a.size() - b.size()); k >= 0; --k) {
            u64 c = mulm(r[k + b.size() - 1], li);
            q[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = subm(r[k + j], mulm(c, b[j]));
        }
        trim(q);
        trim(r);
    }
    FpPoly mod(const FpPoly& a, const FpPoly& b) const {
        FpPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    FpPoly quo(const FpPoly& a, const FpPoly& b) const {
        FpPoly q, r;
        divmod(a, b, q, r);
        return q;
    }
    FpPoly monic(FpPoly a) const {
        if (a.empty()) return a;
        const u64 li = inv(a.back());
        for (auto& x : a) x = mulm(x, li);
        return a;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// s with s*a = 1 mod m
    FpPoly inverse_mod(const FpPoly& a, const FpPoly& m) const {
        FpPoly r0 = m, r1 = mod(a, m), s0, s1{1};
        while (!r1.empty()) {
            FpPoly q, r;
            divmod(r0, r1, q, r);
            FpPoly s = sub(s0, mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.size() != 1) throw std::logic_error("polynomials are not coprime modulo p");
        const u64 ci = inv(r0[0]);
        for (auto& x : s0) x = mulm(x, ci);
        return mod(s0, m);
    }
    FpPoly powmod(FpPoly base, const Int& e, const FpPoly& m) const {
        FpPoly r{1};
        base = mod(base, m);
        const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
        for (unsigned i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (boost::multiprecision::bit_test(e, i)) r = mod(mul(r, base), m);
        }
        return r;
    }
    FpPoly derivative(const FpPoly& a) const {
        if (a.size() <= 1) return {};
        FpPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p);
        trim(r);
        return r;
    }
};

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<FpPoly> equal_degree(const Fp& F, const FpPoly& g, int d, std::mt19937_64& rng) {
    const int n = static_cast<int>(g.size()) - 1;
    if (n == d) return {g};
    Int e = boost::multiprecision::pow(Int(F.p), static_cast<unsigned>(d));
    e = (e - 1) / 2;
    for (;;) {
        FpPoly a(n);
        for (auto& x : a) x = rng() % F.p;
        F.trim(a);
        if (a.size() < 2) continue;
        FpPoly b = F.sub(F.powmod(a, e, g), FpPoly{1});
        FpPoly h = F.gcd(g, b);
        const int dh = static_cast<int>(h.size()) - 1;
        if (dh > 0 && dh < n) {
            auto left = equal_degree(F, h, d, rng);
            auto right = equal_degree(F, F.monic(F.quo(g, h)), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<FpPoly> factor_mod_p(const Fp& F, FpPoly f) {
    f = F.monic(f);
    std::vector<FpPoly> out;
    std::mt19937_64 rng(0x5eed1234abcdULL);
    FpPoly h{0, 1};
    const FpPoly x{0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = F.powmod(h, Int(F.p), f);
        FpPoly g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            auto parts = equal_degree(F, g, d, rng);
            out.insert(out.end(), parts.begin(), parts.end());
            f = F.monic(F.quo(f, g));
            h = F.mod(h, f);
        }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

UPoly lift_to_z(const FpPoly& a) {
    UPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
    return r;
}

UPoly mod_sym(const UPoly& a, const Int& m) {
    UPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sym_mod(a[i], m);
    upoly::trim(r);
    return r;
}

UPoly mod_pos(const UPoly& a, const Int& m) {
    UPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = pos_mod(a[i], m);
    upoly::trim(r);
    return r;
}

/// Irreducible factors of a primitive square-free polynomial with positive leading coefficient.
std::vector<UPoly> factor_squarefree(const UPoly& f) {
    if (upoly::degree(f) <= 1) return {f};
    const Int lc = f.back();
    const UPoly df = upoly::derivative(f);
    u64 p = 3;
    for (;; p += 2) {
        if (!is_prime(p)) continue;
        if (lc % Int(p) == 0) continue;
        Fp F{p};
        FpPoly fp = F.reduce(f);
        if (F.gcd(fp, F.derivative(fp)).size() == 1) break;
    }
    const Fp F{p};
    std::vector<FpPoly> modp = factor_mod_p(F, F.reduce(f));
    if (modp.size() == 1) return {f};

    Int norm1 = 0;
    for (const auto& c : f) norm1 += iabs(c);
    const int d = upoly::degree(f);
    const Int bound = 2 * iabs(lc) * (Int(1) << d) * norm1;

    // Linear Hensel lifting of the monic modular factors.
    const std::size_t r = modp.size();
    std::vector<FpPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        FpPoly others{1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) others = F.mul(others, modp[j]);
        s[i] = F.inverse_mod(others, modp[i]);
    }
    std::vector<UPoly> g(r);
    for (std::size_t i = 0; i < r; ++i) g[i] = lift_to_z(modp[i]);
    const u64 lcinv = F.inv(pos_mod(lc, Int(p)).convert_to<u64>());
    Int m = p;
    while (m <= bound) {
        UPoly prod{lc};
        for (const auto& gi : g) prod = mod_pos(upoly::mul(prod, gi), m * p);
        UPoly err = upoly::sub(f, prod);
        for (auto& c : err) {
            if (c % m != 0) throw std::logic_error("Hensel lifting invariant violated");
            c /= m;
        }
        FpPoly e = F.reduce(err);
        for (auto& c : e) c = F.mulm(c, lcinv);
        for (std::size_t i = 0; i < r; ++i) {
            FpPoly delta = F.mod(F.mul(e, s[i]), modp[i]);
            g[i] = upoly::add(g[i], upoly::scale(lift_to_z(delta), m));
        }
        m *= p;
    }

    // Recombination.
    std::vector<UPoly> result;
    std::vector<UPoly> pool = g;
    UPoly cur = f;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t k = 0; k < size; ++k) idx[k] = k;
        for (;;) {
            UPoly cand{upoly::lead(cur)};
            for (auto k : idx) cand = mod_sym(upoly::mul(cand, pool[k]), m);
            cand = upoly::primitive(cand);
            UPoly q;
            if (upoly::degree(cand) > 0 && upoly::divide_exact(cur, cand, q)) {
                result.push_back(cand);
                cur = q;
                std::vector<UPoly> rest;
                for (std::size_t k = 0; k < pool.size(); ++k)
                    if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(pool[k]);
                pool = std::move(rest);
                found = true;
                break;
            }
            int k = static_cast<int>(size) - 1;
            while (k >= 0 && idx[k] == pool.size() - size + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (std::size_t j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (upoly::degree(cur) > 0) result.push_back(upoly::primitive(cur));
    return result;
}

}  // namespace

Factorization factor(const UPoly& p0) {
    UPoly p = p0;
    upoly::trim(p);
    if (p.empty()) throw PreconditionError("cannot factor the zero polynomial");
    Factorization out;
    Int c = upoly::content(p);
    if (p.back() < 0) c = -c;
    out.unit = c;
    UPoly f = upoly::primitive(p);

    std::vector<std::pair<UPoly, int>> facs;
    int tpow = 0;
    while (f.size() > 1 && f[0] == 0) {
        f.erase(f.begin());
        ++tpow;
    }
    if (tpow) facs.push_back({UPoly{0, 1}, tpow});

    if (upoly::degree(f) > 0) {
        UPoly cpart = upoly::gcd(f, upoly::derivative(f));
        UPoly w;
        upoly::divide_exact(f, cpart, w);
        w = upoly::primitive(w);
        int mult = 1;
        while (upoly::degree(w) > 0) {
            UPoly y = upoly::gcd(w, cpart);
            UPoly z;
            upoly::divide_exact(w, y, z);
            z = upoly::primitive(z);
            if (upoly::degree(z) > 0)
                for (auto& irr : factor_squarefree(z)) facs.push_back({irr, mult});
            ++mult;
            w = y;
            UPoly nc;
            upoly::divide_exact(cpart, y, nc);
            cpart = upoly::primitive(nc);
        }
    }
    std::sort(facs.begin(), facs.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    out.factors = std::move(facs);
    return out;
}

}  // namespace mgl
