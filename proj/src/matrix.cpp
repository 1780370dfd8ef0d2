#include "mockgl/matrix.hpp"

namespace mgl {

IntMatrix diag(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Int det(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("det of non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rat det(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("det of non-square matrix");
    const int n = a.rows();
    RatMatrix m = a;
    Rat d = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            m.swap_rows(k, p);
            d = -d;
        }
        d *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

int rank(const RatMatrix& a) {
    RatMatrix m = a;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.swap_rows(r, p);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = a.rows();
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::domain_error("singular matrix");
        m.swap_rows(k, p);
        inv.swap_rows(k, p);
        Rat piv = m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> congruence_diagonal(const RatMatrix& sym) {
    if (!sym.is_symmetric()) throw std::invalid_argument("congruence diagonalization needs a symmetric matrix");
    const int n = sym.rows();
    RatMatrix m = sym;
    std::vector<Rat> d;
    d.reserve(n);
    auto swap_both = [&](int i, int j) {
        m.swap_rows(i, j);
        m.swap_cols(i, j);
    };
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m(i, i) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                for (int i = k; i < n; ++i) d.push_back(0);
                return d;
            }
            for (int c = 0; c < n; ++c) m(pi, c) += m(pj, c);
            for (int r = 0; r < n; ++r) m(r, pi) += m(r, pj);
            p = pi;
        }
        swap_both(k, p);
        const Rat piv = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / piv;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            for (int j = k; j < n; ++j) m(j, i) -= f * m(j, k);
        }
        d.push_back(piv);
    }
    return d;
}

Inertia inertia(const RatMatrix& sym) {
    Inertia in;
    for (const auto& x : congruence_diagonal(sym)) {
        if (x > 0)
            ++in.pos;
        else if (x < 0)
            ++in.neg;
        else
            ++in.zero;
    }
    return in;
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_csv(const IntMatrix& a) {
    std::ostringstream os;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
        os << "\n";
    }
    return os.str();
}

}  // namespace mgl
