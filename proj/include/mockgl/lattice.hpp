#pragma once

#include "mockgl/matrix.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace mgl {

/// Unimodular U with M*U in column echelon form; returns (M*U, U).
std::pair<IntMatrix, IntMatrix> column_echelon(const IntMatrix& m);
/// Basis (as columns) of the integer kernel {x : M x = 0}; always saturated.
IntMatrix kernel_basis(const IntMatrix& m);
/// Basis of (column span of B tensor Q) intersected with Z^n.
IntMatrix saturate(const IntMatrix& b);
/// True when the columns of B extend to a basis of Z^n.
bool is_primitive(const IntMatrix& b);
/// Unimodular Q whose last column is the primitive vector y.
IntMatrix complete_to_basis(const std::vector<Int>& y);
bool is_unimodular(const IntMatrix& p);

/// Hilbert symbol (a, b)_p for nonzero integers and a prime p.
int hilbert_symbol(const Int& a, const Int& b, const Int& p);
/// Prime factors of |n| (trial division, with a Miller-Rabin test on the cofactor); empty optional if it gave up.
std::optional<std::vector<Int>> prime_factors(const Int& n);
bool is_probable_prime(const Int& n);

/// Appends every v != 0 with |v_i| <= h, first nonzero entry positive and v^T A v = 0.
/// Returns false when the work counter passes the cap.
bool isotropic_vectors(const IntMatrix& a, int h, long long cap, long long& work, std::vector<std::vector<Int>>& out);

struct IsotropicSearchResult {
    enum class Status { Found, Exhausted, WorkCap } status = Status::Exhausted;
    IntMatrix basis;  // n x k, saturated
    int height = 0;
    long long work = 0;
};

/// Searches for k linearly independent vectors of height <= max_height with v^T A w = 0 for all pairs
/// (including v = w), and returns a saturated basis of their span.
IsotropicSearchResult isotropic_search(const IntMatrix& a, int k, int max_height, long long work_cap);

}  // namespace mgl
