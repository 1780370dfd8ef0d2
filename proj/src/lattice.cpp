#include "mockgl/lattice.hpp"

#include <algorithm>
#include <array>

namespace mgl {

namespace {

// (g, s, t) with s a + t b = g = gcd(a, b) >= 0
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Int q = r0 / r1;
        Int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    s = s0;
    t = t0;
}

}  // namespace

std::pair<IntMatrix, IntMatrix> column_echelon(const IntMatrix& m) {
    IntMatrix h = m;
    const int rows = m.rows(), cols = m.cols();
    IntMatrix u = IntMatrix::identity(cols);
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        for (int j = c + 1; j < cols; ++j) {
            if (h(r, j) == 0) continue;
            const Int a = h(r, c), b = h(r, j);
            Int g, s, t;
            ext_gcd(a, b, g, s, t);
            const Int p = a / g, q = b / g;
            // [col_c, col_j] <- [s col_c + t col_j, -q col_c + p col_j]
            for (auto* mat : {&h, &u}) {
                for (int i = 0; i < mat->rows(); ++i) {
                    const Int x = (*mat)(i, c), y = (*mat)(i, j);
                    (*mat)(i, c) = s * x + t * y;
                    (*mat)(i, j) = -q * x + p * y;
                }
            }
        }
        if (h(r, c) != 0) {
            if (h(r, c) < 0)
                for (auto* mat : {&h, &u})
                    for (int i = 0; i < mat->rows(); ++i) (*mat)(i, c) = -(*mat)(i, c);
            ++c;
        }
    }
    return {h, u};
}

IntMatrix kernel_basis(const IntMatrix& m) {
    const auto [h, u] = column_echelon(m);
    std::vector<int> zero_cols;
    for (int j = 0; j < h.cols(); ++j) {
        bool z = true;
        for (int i = 0; i < h.rows() && z; ++i) z = h(i, j) == 0;
        if (z) zero_cols.push_back(j);
    }
    IntMatrix k(m.cols(), static_cast<int>(zero_cols.size()));
    for (int c = 0; c < static_cast<int>(zero_cols.size()); ++c)
        for (int i = 0; i < m.cols(); ++i) k(i, c) = u(i, zero_cols[c]);
    return k;
}

IntMatrix saturate(const IntMatrix& b) {
    if (b.cols() == 0) return b;
    const IntMatrix perp = kernel_basis(b.transpose());  // n x (n - r)
    if (perp.cols() == 0) return IntMatrix::identity(b.rows());
    return kernel_basis(perp.transpose());
}

bool is_primitive(const IntMatrix& b) {
    if (b.cols() == 0) return true;
    if (rank(to_rat(b)) != b.cols()) return false;
    const IntMatrix s = saturate(b);
    // B = S T; primitive iff |det T| = 1. Solve with the Gram matrix of S.
    const RatMatrix st = to_rat(s.transpose());
    const RatMatrix t = inverse(st * to_rat(s)) * (st * to_rat(b));
    return iabs(numerator(det(t))) == 1 && denominator(det(t)) == 1;
}

bool is_unimodular(const IntMatrix& p) { return p.square() && (p.rows() == 0 || iabs(det(p)) == 1); }

IntMatrix complete_to_basis(const std::vector<Int>& y) {
    const int n = static_cast<int>(y.size());
    IntMatrix row(1, n);
    for (int i = 0; i < n; ++i) row(0, i) = y[i];
    const auto [h, u] = column_echelon(row);
    if (h(0, 0) != 1) throw PreconditionError("vector is not primitive");
    // y^T U = e_1^T, so (U^T) y = e_1 and y is the first column of (U^T)^{-1}
    IntMatrix q = to_int(inverse(to_rat(u.transpose())));
    // move the first column to the end
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j < n; ++j) out(i, j - 1) = q(i, j);
        out(i, n - 1) = q(i, 0);
    }
    return out;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < r && comp; ++i) {
            x = x * x % n;
            if (x == n - 1) comp = false;
        }
        if (comp) return false;
    }
    return true;
}

std::optional<std::vector<Int>> prime_factors(const Int& n0) {
    Int n = iabs(n0);
    std::vector<Int> out;
    for (Int p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) {
        if (!is_probable_prime(n)) return std::nullopt;
        out.push_back(n);
    }
    return out;
}

namespace {

int legendre(const Int& a, const Int& p) {
    const Int r = boost::multiprecision::powm(pos_mod(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

int valuation(Int& x, const Int& p) {
    int v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

int hilbert_symbol(const Int& a0, const Int& b0, const Int& p) {
    if (a0 == 0 || b0 == 0) throw std::invalid_argument("hilbert symbol of zero");
    Int u = a0, v = b0;
    const int alpha = valuation(u, p), beta = valuation(v, p);
    if (p == 2) {
        auto eps = [](const Int& x) { return static_cast<int>(pos_mod((x - 1) / 2, 2)); };
        auto omg = [](const Int& x) { return static_cast<int>(pos_mod((x * x - 1) / 8, 2)); };
        const int e = eps(u) * eps(v) + alpha * omg(v) + beta * omg(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    if ((alpha * beta) % 2 == 1 && pos_mod((p - 1) / 2, 2) == 1) s = -s;
    if (beta % 2 == 1) s *= legendre(u, p);
    if (alpha % 2 == 1) s *= legendre(v, p);
    return s;
}

namespace {

struct Searcher {
    const IntMatrix& a;
    int n, k;
    long long cap;
    long long work = 0;
    std::vector<std::vector<Int>> cands;
    std::vector<int> chosen;
    bool capped = false;

    Int form(const std::vector<Int>& v, const std::vector<Int>& w) const {
        Int s = 0;
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            Int t = 0;
            for (int j = 0; j < n; ++j) t += a(i, j) * w[j];
            s += v[i] * t;
        }
        return s;
    }

    bool independent(const std::vector<int>& idx) const {
        RatMatrix m(n, static_cast<int>(idx.size()));
        for (int c = 0; c < static_cast<int>(idx.size()); ++c)
            for (int i = 0; i < n; ++i) m(i, c) = cands[idx[c]][i];
        return rank(m) == static_cast<int>(idx.size());
    }

    bool dfs(const std::vector<int>& pool) {
        if (static_cast<int>(chosen.size()) == k) return true;
        if (static_cast<int>(pool.size()) < k - static_cast<int>(chosen.size())) return false;
        for (std::size_t p = 0; p < pool.size(); ++p) {
            if (++work > cap) {
                capped = true;
                return false;
            }
            const int c = pool[p];
            chosen.push_back(c);
            if (!independent(chosen)) {
                chosen.pop_back();
                continue;
            }
            std::vector<int> next;
            for (std::size_t q = p + 1; q < pool.size(); ++q) {
                const int d = pool[q];
                work += 1;
                if (form(cands[c], cands[d]) == 0 && form(cands[d], cands[c]) == 0) next.push_back(d);
            }
            if (dfs(next)) return true;
            chosen.pop_back();
            if (capped) return false;
        }
        return false;
    }
};

}  // namespace

bool isotropic_vectors(const IntMatrix& a, int h, long long cap, long long& work, std::vector<std::vector<Int>>& out) {
    const int n = a.rows();
    std::vector<Int> v(n, 0);
    // q(v) = a_ll x^2 + (sum_{i<l} (a_il + a_li) v_i) x + q(rest), l = n-1
    const int l = n - 1;
    std::vector<int> idx(l, -h);
    if (l == 0) {
        if (a(0, 0) == 0) out.push_back({1});
        return true;
    }
    for (;;) {
        if (++work > cap) return false;
        for (int i = 0; i < l; ++i) v[i] = idx[i];
        Int lin = 0, cst = 0;
        for (int i = 0; i < l; ++i) {
            if (v[i] == 0) continue;
            lin += (a(i, l) + a(l, i)) * v[i];
            for (int j = 0; j < l; ++j) cst += a(i, j) * v[i] * v[j];
        }
        const Int& qa = a(l, l);
        std::vector<Int> xs;
        if (qa == 0) {
            if (lin == 0) {
                if (cst == 0)
                    for (int x = -h; x <= h; ++x) xs.push_back(x);
            } else if (cst % lin == 0) {
                xs.push_back(-cst / lin);
            }
        } else {
            const Int disc = lin * lin - 4 * qa * cst;
            if (disc >= 0 && is_square(disc)) {
                const Int r = isqrt(disc);
                for (const Int& num : std::array<Int, 2>{Int(-lin + r), Int(-lin - r)})
                    if (num % (2 * qa) == 0) xs.push_back(num / (2 * qa));
                if (r == 0 && xs.size() == 2) xs.pop_back();
            }
        }
        for (const auto& x : xs) {
            if (iabs(x) > h) continue;
            v[l] = x;
            int first = 0;
            for (int i = 0; i < n && first == 0; ++i) first = v[i].sign();
            if (first > 0) out.push_back(v);
        }
        int i = 0;
        while (i < l && idx[i] == h) idx[i++] = -h;
        if (i == l) break;
        ++idx[i];
    }
    return true;
}

namespace {

Int height_of(const std::vector<Int>& v) {
    Int h = 0;
    for (const auto& x : v) h = std::max(h, iabs(x));
    return h;
}

}  // namespace

IsotropicSearchResult isotropic_search(const IntMatrix& a, int k, int max_height, long long work_cap) {
    IsotropicSearchResult res;
    const int n = a.rows();
    if (k == 0) {
        res.status = IsotropicSearchResult::Status::Found;
        res.basis = IntMatrix(n, 0);
        return res;
    }
    for (int h = 1; h <= max_height; ++h) {
        std::vector<std::vector<Int>> cands;
        if (!isotropic_vectors(a, h, work_cap, res.work, cands)) {
            res.status = IsotropicSearchResult::Status::WorkCap;
            return res;
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const auto& x, const auto& y) { return height_of(x) < height_of(y); });
        Searcher s{a, n, k, work_cap - res.work};
        s.cands = std::move(cands);
        std::vector<int> pool;
        for (int i = 0; i < static_cast<int>(s.cands.size()); ++i)
            if (s.form(s.cands[i], s.cands[i]) == 0) pool.push_back(i);
        const bool ok = s.dfs(pool);
        res.work += s.work;
        if (ok) {
            IntMatrix b(n, k);
            for (int c = 0; c < k; ++c)
                for (int i = 0; i < n; ++i) b(i, c) = s.cands[s.chosen[c]][i];
            res.basis = saturate(b);
            res.height = h;
            res.status = IsotropicSearchResult::Status::Found;
            return res;
        }
        if (s.capped || res.work > work_cap) {
            res.status = IsotropicSearchResult::Status::WorkCap;
            return res;
        }
    }
    res.status = IsotropicSearchResult::Status::Exhausted;
    return res;
}

}  // namespace mgl
