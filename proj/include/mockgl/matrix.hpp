#pragma once

#include "mockgl/numeric.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mgl {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool square() const { return r_ == c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == 0) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix block(int r0, int c0, int nr, int nc) const {
        Matrix m(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    std::vector<T> column(int j) const {
        std::vector<T> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(int j, const std::vector<T>& v) {
        for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    const std::vector<T>& data() const { return a_; }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    }

    int r_ = 0;
    int c_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline RatMatrix to_rat(const IntMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
    return m;
}

/// Fails unless every entry is an integer.
inline IntMatrix to_int(const RatMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (denominator(a(i, j)) != 1) throw std::domain_error("matrix has non-integral entry");
            m(i, j) = numerator(a(i, j));
        }
    return m;
}

IntMatrix diag(const std::vector<Int>& d);

/// Fraction-free Bareiss elimination.
Int det(const IntMatrix& a);
Rat det(const RatMatrix& a);

int rank(const RatMatrix& a);
RatMatrix inverse(const RatMatrix& a);

struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    int signature() const { return pos - neg; }
};

/// Inertia of a symmetric rational matrix by congruence diagonalization.
Inertia inertia(const RatMatrix& sym);
/// Diagonal entries of a congruence diagonalization (zeros included).
std::vector<Rat> congruence_diagonal(const RatMatrix& sym);

std::string to_string(const IntMatrix& a);
std::string to_csv(const IntMatrix& a);

}  // namespace mgl
