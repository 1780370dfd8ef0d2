#include "mockgl/matalg.hpp"

#include "mockgl/lattice.hpp"

#include <set>

namespace mgl {

namespace {

using Bits = std::vector<int>;

struct Form2 {
    IntMatrix m;  // entries 0/1
    int operator()(const Bits& x, const Bits& y) const {
        int s = 0;
        for (int i = 0; i < m.rows(); ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < m.cols(); ++j)
                if (y[j] && m(i, j) != 0) s ^= 1;
        }
        return s;
    }
};

Bits add(const Bits& a, const Bits& b) {
    Bits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] ^ b[i];
    return c;
}

Bits unit(int n, int i) {
    Bits e(n, 0);
    e[i] = 1;
    return e;
}

// Symplectic basis e1, f1, e2, f2, ... of the span of `w`, on which the form is alternating and nondegenerate.
std::vector<Bits> symplectic(const Form2& b, std::vector<Bits> w) {
    std::vector<Bits> out;
    while (!w.empty()) {
        const Bits e = w.front();
        w.erase(w.begin());
        std::size_t fi = 0;
        while (fi < w.size() && b(e, w[fi]) == 0) ++fi;
        if (fi == w.size()) throw std::logic_error("degenerate form over the two-element field");
        const Bits f = w[fi];
        w.erase(w.begin() + static_cast<long>(fi));
        for (auto& x : w) {
            Bits y = x;
            if (b(x, f)) y = add(y, e);
            if (b(x, e)) y = add(y, f);
            x = y;
        }
        out.push_back(e);
        out.push_back(f);
    }
    return out;
}

IntMatrix columns(const std::vector<Bits>& cols, int n) {
    IntMatrix w(n, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (int i = 0; i < n; ++i) w(i, c) = cols[c][i];
    return w;
}

bool symmetric_mod2(const IntMatrix& a) { return mod2(a - a.transpose()).is_zero(); }

}  // namespace

IntMatrix mod2(const IntMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = pos_mod(a(i, j), 2);
    return m;
}

std::string to_string(const Mod2Class& c) {
    return (c.kind == Mod2Class::Kind::Hyperbolic ? "H^" : "I_") + std::to_string(c.rank);
}

IntMatrix mod2_normal_form(Mod2Class::Kind kind, int rank) {
    if (kind == Mod2Class::Kind::Identity) return IntMatrix::identity(rank);
    IntMatrix h(2 * rank, 2 * rank);
    for (int k = 0; k < rank; ++k) {
        h(2 * k, 2 * k + 1) = 1;
        h(2 * k + 1, 2 * k) = 1;
    }
    return h;
}

Mod2Class mod2_classify(const MockSeifertMatrix& a) {
    const int n = a.size();
    if (!is_odd(a.det())) throw PreconditionError("determinant is even");
    if (!symmetric_mod2(a.entries)) throw PreconditionError("mod 2 reduction is not symmetric");
    const Form2 b{mod2(a.entries)};
    std::vector<Bits> basis;
    for (int i = 0; i < n; ++i) basis.push_back(unit(n, i));
    Mod2Class out;
    if (a.type() == FormType::Even) {
        out.kind = Mod2Class::Kind::Hyperbolic;
        out.rank = n / 2;
        out.witness = columns(symplectic(b, basis), n);
    } else {
        out.kind = Mod2Class::Kind::Identity;
        out.rank = n;
        std::vector<Bits> ortho, w = basis;
        while (!w.empty()) {
            std::size_t k = 0;
            while (k < w.size() && b(w[k], w[k]) == 0) ++k;
            if (k < w.size()) {
                const Bits v = w[k];
                w.erase(w.begin() + static_cast<long>(k));
                for (auto& x : w)
                    if (b(x, v)) x = add(x, v);
                ortho.push_back(v);
                continue;
            }
            // the rest is alternating: trade one orthonormal vector v and a hyperbolic pair for three
            const auto pair = symplectic(b, {w.begin(), w.end()});
            const Bits e = pair[0], f = pair[1];
            std::vector<Bits> rest(pair.begin() + 2, pair.end());
            const Bits v = ortho.back();
            ortho.pop_back();
            ortho.push_back(add(v, e));
            ortho.push_back(add(v, f));
            ortho.push_back(add(add(v, e), f));
            w = rest;
        }
        out.witness = columns(ortho, n);
    }
    if (mod2(out.witness.transpose() * a.entries * out.witness) != mod2_normal_form(out.kind, out.rank))
        throw std::logic_error("mod 2 witness failed verification");
    return out;
}

IntMatrix lift_unimodular(const IntMatrix& w) {
    const int n = w.rows();
    IntMatrix m = mod2(w);
    struct Op {
        bool swap;
        int i, j;
    };
    std::vector<Op> ops;
    // column operations reducing m to the identity over GF(2)
    for (int r = 0; r < n; ++r) {
        int p = r;
        while (p < n && m(r, p) == 0) ++p;
        if (p == n) throw PreconditionError("matrix is singular mod 2");
        if (p != r) {
            m.swap_cols(p, r);
            ops.push_back({true, p, r});
        }
        for (int c = 0; c < n; ++c) {
            if (c == r || m(r, c) == 0) continue;
            for (int i = 0; i < n; ++i) m(i, c) = (m(i, c) + m(i, r)) % 2;
            ops.push_back({false, c, r});  // col c += col r
        }
    }
    IntMatrix p = IntMatrix::identity(n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->swap)
            p.swap_cols(it->i, it->j);
        else
            for (int i = 0; i < n; ++i) p(i, it->i) -= p(i, it->j);
    }
    return p;
}

std::string to_string(Admissibility a) {
    switch (a) {
        case Admissibility::Yes: return "yes";
        case Admissibility::No: return "no";
        default: return "unknown";
    }
}

AdmissibilityResult is_admissible(const MockSeifertMatrix& a, int budget) {
    AdmissibilityResult r;
    const int n = a.size();
    if (n % 2 != 0) return {Admissibility::No, "odd size", std::nullopt};
    if (!is_odd(a.det())) return {Admissibility::No, "even determinant", std::nullopt};
    if (!symmetric_mod2(a.entries)) return {Admissibility::No, "mod 2 reduction is not symmetric", std::nullopt};
    if (a.type() == FormType::Even) return {Admissibility::Yes, "even type", std::nullopt};

    // characteristic vector: A c = diag(A) over GF(2)
    const IntMatrix m2 = mod2(a.entries);
    IntMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m2(i, j);
        aug(i, n) = pos_mod(a.entries(i, i), 2);
    }
    for (int c = 0, r0 = 0; c < n; ++c) {
        int p = r0;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) continue;
        aug.swap_rows(p, r0);
        for (int i = 0; i < n; ++i)
            if (i != r0 && aug(i, c) != 0)
                for (int j = 0; j <= n; ++j) aug(i, j) = (aug(i, j) + aug(r0, j)) % 2;
        ++r0;
    }
    std::vector<int> cvec(n);
    for (int i = 0; i < n; ++i) cvec[i] = static_cast<int>(aug(i, n));

    long long work = 0;
    const long long cap = 2000000;
    std::vector<Int> y;
    for (int h = 1; h <= budget && y.empty(); ++h) {
        std::vector<std::vector<Int>> cands;
        if (!isotropic_vectors(a.entries, h, cap, work, cands)) break;
        for (const auto& v : cands) {
            bool match = true;
            Int g = 0;
            for (int i = 0; i < n && match; ++i) {
                match = pos_mod(v[i], 2) == cvec[i];
                g = gcd(g, v[i]);
            }
            if (match && g == 1) {
                y = v;
                break;
            }
        }
    }
    if (y.empty()) {
        r.verdict = Admissibility::Unknown;
        r.detail = "no primitive isotropic vector congruent to the characteristic vector within height " +
                   std::to_string(budget);
        const auto d = congruence_diagonal(a.symmetric_part());
        const Rat md = -d[0] * d[1];
        if (n == 2 && md != 0 && !is_square(numerator(md) * denominator(md)))
            r.detail += "; the quadratic form is anisotropic over Q, so no such vector exists";
        return r;
    }
    const IntMatrix q = complete_to_basis(y);
    const Form2 b{mod2(q.transpose() * a.entries * q)};
    const Bits c = unit(n, n - 1);
    int ui = 0;
    while (ui < n - 1 && b(unit(n, ui), c) == 0) ++ui;
    const Bits u = unit(n, ui);
    std::vector<Bits> rest;
    for (int j = 0; j < n - 1; ++j) {
        if (j == ui) continue;
        Bits w = unit(n, j);
        const int bu = b(u, w), bc = b(c, w);
        if (bc) w = add(w, u);
        if (bu ^ bc) w = add(w, c);
        rest.push_back(w);
    }
    std::vector<Bits> cols = symplectic(b, rest);
    cols.push_back(u);
    cols.push_back(c);
    const IntMatrix rm = columns(cols, n);
    const IntMatrix top = rm.block(0, 0, n - 1, n - 1);
    const IntMatrix lifted = lift_unimodular(top);
    IntMatrix rint(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) rint(i, j) = lifted(i, j);
    for (int j = 0; j < n - 1; ++j) rint(n - 1, j) = rm(n - 1, j);
    rint(n - 1, n - 1) = 1;
    const IntMatrix p = q * rint;
    const IntMatrix ap = p.transpose() * a.entries * p;
    IntMatrix shape = block_diag(mod2_normal_form(Mod2Class::Kind::Hyperbolic, n / 2 - 1), IntMatrix{{1, 1}, {1, 0}});
    if (mod2(ap) != shape || ap(n - 1, n - 1) != 0 || !is_unimodular(p))
        throw std::logic_error("admissibility witness failed verification");
    r.verdict = Admissibility::Yes;
    r.detail = "odd type with an isotropic characteristic vector";
    r.witness = p;
    return r;
}

MockSeifertMatrix block_sum(const MockSeifertMatrix& a, const MockSeifertMatrix& b) {
    std::optional<Int> e;
    if (a.euler && b.euler) e = *a.euler + *b.euler;
    return MockSeifertMatrix(block_diag(a.entries, b.entries), e);
}

MockSeifertMatrix negate(const MockSeifertMatrix& a) {
    std::optional<Int> e;
    if (a.euler) e = -*a.euler;
    return MockSeifertMatrix(-a.entries, e);
}

MockSeifertMatrix congruent(const MockSeifertMatrix& a, const IntMatrix& p) {
    if (!is_unimodular(p) || p.rows() != a.size()) throw PreconditionError("congruence needs a unimodular matrix of matching size");
    return MockSeifertMatrix(p.transpose() * a.entries * p, a.euler);
}

std::string to_string(MetabolicVerdict::Kind k) {
    switch (k) {
        case MetabolicVerdict::Kind::Certificate: return "certificate";
        case MetabolicVerdict::Kind::Obstructed: return "obstructed";
        default: return "unknown";
    }
}

std::string to_string(MetabolicVerdict::Reason r) {
    switch (r) {
        case MetabolicVerdict::Reason::OddSize: return "odd_size";
        case MetabolicVerdict::Reason::FoxMilnorFails: return "fox_milnor_fails";
        case MetabolicVerdict::Reason::SignatureNonzero: return "signature_nonzero";
        case MetabolicVerdict::Reason::DetNotSquare: return "det_not_square";
        case MetabolicVerdict::Reason::HasseWittNontrivial: return "hasse_witt_nontrivial";
        default: return "none";
    }
}

bool verify_certificate(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || 2 * b.cols() != a.rows()) return false;
    if (!(b.transpose() * a * b).is_zero()) return false;
    return is_primitive(b);
}

int hasse_invariant(const std::vector<Rat>& d, const Int& p) {
    std::vector<Int> v;
    for (const auto& x : d) v.push_back(numerator(x) * denominator(x));
    int c = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) c *= hilbert_symbol(v[i], v[j], p);
    return c;
}

namespace {

MetabolicVerdict obstructed(MetabolicVerdict::Reason r, std::string detail) {
    MetabolicVerdict v;
    v.kind = MetabolicVerdict::Kind::Obstructed;
    v.reason = r;
    v.detail = std::move(detail);
    return v;
}

MetabolicVerdict certificate(IntMatrix b, std::string detail) {
    MetabolicVerdict v;
    v.kind = MetabolicVerdict::Kind::Certificate;
    v.basis = std::move(b);
    v.detail = std::move(detail);
    return v;
}

// A = B + (-B) with zero off-diagonal blocks
bool is_double(const IntMatrix& a) {
    const int n = a.rows(), k = n / 2;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (a(i, k + j) != 0 || a(k + i, j) != 0 || a(k + i, k + j) != -a(i, j)) return false;
    return true;
}

}  // namespace

MetabolicVerdict metabolic(const MockSeifertMatrix& a, int budget) {
    const int n = a.size();
    if (n == 0) return certificate(IntMatrix(0, 0), "empty matrix");
    if (n % 2 != 0) return obstructed(MetabolicVerdict::Reason::OddSize, "odd size");
    const int g = n / 2;
    if (is_double(a.entries)) {
        IntMatrix b(n, g);
        for (int i = 0; i < g; ++i) b(i, i) = b(g + i, i) = 1;
        if (verify_certificate(a.entries, b)) return certificate(b, "diagonal subspace of A + (-A)");
    }

    const LaurentPoly delta = alexander(a);
    if (!delta.is_zero()) {
        const auto fm = fox_milnor(delta);
        if (!fm.passes) return obstructed(MetabolicVerdict::Reason::FoxMilnorFails, fm.reason);
    }

    const SignatureFunction sf = signature_function(a);
    for (std::size_t k = 0; k < sf.arc_values.size(); ++k)
        if (sf.arc_values[k] != 0) {
            auto v = obstructed(MetabolicVerdict::Reason::SignatureNonzero,
                                "signature " + std::to_string(sf.arc_values[k]) + " at " + sf.samples[k].to_text());
            v.omega = sf.samples[k];
            return v;
        }

    const IntMatrix s = a.entries + a.entries.transpose();
    const Int ds = det(s);
    const Int signed_det = g % 2 == 0 ? ds : Int(-ds);
    if (!is_square(signed_det))
        return obstructed(MetabolicVerdict::Reason::DetNotSquare,
                          "(-1)^g det(A + A^T) = " + signed_det.str() + " is not a square");

    if (ds != 0) {
        const auto d = congruence_diagonal(to_rat(s));
        std::set<Int> primes{2};
        bool complete = true;
        for (const auto& x : d)
            for (const Int& part : {numerator(x), denominator(x)}) {
                const auto f = prime_factors(part);
                if (!f) {
                    complete = false;
                    continue;
                }
                primes.insert(f->begin(), f->end());
            }
        for (const Int& p : primes) {
            const int expected = (p == 2 && (g * (g - 1) / 2) % 2 == 1) ? -1 : 1;
            if (hasse_invariant(d, p) != expected) {
                auto v = obstructed(MetabolicVerdict::Reason::HasseWittNontrivial,
                                    "Hasse-Witt invariant of A + A^T at p = " + p.str() + " differs from the hyperbolic form");
                v.prime = p;
                return v;
            }
        }
        (void)complete;
    }

    const auto res = isotropic_search(a.entries, g, budget, 3000000);
    if (res.status == IsotropicSearchResult::Status::Found && verify_certificate(a.entries, res.basis))
        return certificate(res.basis, "isotropic subspace found at height " + std::to_string(res.height));
    MetabolicVerdict v;
    v.kind = MetabolicVerdict::Kind::Unknown;
    v.detail = res.status == IsotropicSearchResult::Status::WorkCap
                   ? "search work cap reached"
                   : "no half-dimensional isotropic subspace of height <= " + std::to_string(budget);
    return v;
}

MetabolicVerdict concordant(const MockSeifertMatrix& a, const MockSeifertMatrix& b, int budget) {
    return metabolic(block_sum(a, negate(b)), budget);
}

}  // namespace mgl
