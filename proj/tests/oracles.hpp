#pragma once

#include "mockgl/gauss.hpp"
#include "mockgl/matrix.hpp"
#include "mockgl/poly.hpp"

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using mgl::Int;
using mgl::IntMatrix;
using mgl::Rat;
using mgl::RatMatrix;

Int cofactor_det(const IntMatrix& a);
Rat cofactor_det(const RatMatrix& a);
RatMatrix adjugate_inverse(const IntMatrix& a);

int gf2_rank(const IntMatrix& a);
bool symmetric_mod2(const IntMatrix& a);

/// det(tA - A^T) at an integer t, by cofactor expansion.
Int alexander_at(const IntMatrix& a, const Int& t);

/// Index of each crossing from the two oriented-smoothing components and their linking numbers.
std::map<int, int> smoothing_indices(const mgl::Diagram& d);

/// Signature and nullity of H = (1 - w) A + (1 - conj w) A^T by floating-point eigenvalues.
struct Sig {
    int signature = 0;
    int nullity = 0;
};
Sig hermitian_signature(const IntMatrix& a, std::complex<double> w);

/// f(t) * f(1/t) * t^deg f
mgl::LaurentPoly symmetric_product(const mgl::LaurentPoly& f);

/// B^T A B == 0 and the maximal minors of B have gcd 1.
bool is_metabolizer(const IntMatrix& a, const IntMatrix& b);

IntMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi);
IntMatrix random_unimodular(std::mt19937& rng, int n, int steps = 12);
/// Random matrix with odd determinant that is symmetric mod 2.
IntMatrix random_odd_det(std::mt19937& rng, int n, int lo = -4, int hi = 4);
/// Point ((u^2 - v^2) + 2uv i) / (u^2 + v^2) on the unit circle.
std::pair<Int, Int> random_pythagorean(std::mt19937& rng);

}  // namespace oracle
