#pragma once

#include "mockgl/gauss.hpp"
#include "mockgl/glform.hpp"
#include "mockgl/invariants.hpp"
#include "mockgl/matalg.hpp"

#include <optional>
#include <vector>

namespace mgl {

struct ObstructionBundle {
    LaurentPoly alexander;
    std::string alexander_core;  // normalized, "0" when Delta vanishes
    FoxMilnorResult fox_milnor;
    SignatureFunction signature;
    Int det_symmetric;     // det(A + A^T)
    Int det_square_class;  // squarefree part of det(A + A^T), 0 if singular
    MetabolicVerdict metabolic;
};

ObstructionBundle make_bundle(const MockSeifertMatrix& a, int budget = kDefaultBudget);

struct ConcordanceClass {
    MockSeifertMatrix representative;
    ObstructionBundle bundle;
    AdmissibilityResult admissibility;
    bool waived = false;
};

/// Throws PreconditionError unless the matrix is admissible, or Unknown with the waiver set.
ConcordanceClass class_of(const MockSeifertMatrix& a, bool waiver = false, int budget = kDefaultBudget);
ConcordanceClass identity_class();
ConcordanceClass group_op(const ConcordanceClass& x, const ConcordanceClass& y, int budget = kDefaultBudget);
ConcordanceClass inverse(const ConcordanceClass& x, int budget = kDefaultBudget);

struct OrderBound {
    enum class Kind { One, Two, Four, Infinite, LowerBound } kind = Kind::LowerBound;
    /// Lower bound on the order, assuming torsion orders are powers of two.
    int lower = 1;
    /// Largest tested power known to be non-metabolic.
    int not_dividing = 0;
    /// Smallest tested power with a certificate.
    std::optional<int> divides;
    struct Evidence {
        int power = 1;
        MetabolicVerdict verdict;
    };
    std::vector<Evidence> evidence;
    bool exact() const { return kind != Kind::LowerBound; }
};

std::string to_string(OrderBound::Kind k);
OrderBound order_bound(const ConcordanceClass& x, int budget = kDefaultBudget);
OrderBound order_bound(const MockSeifertMatrix& a, int budget = kDefaultBudget);

/// Stable mod 2 projection, preferred checkerboard matrix, Euler normalization by half bands, class.
ConcordanceClass levine_map(const Diagram& d, int budget = kDefaultBudget);
/// The Euler-normalized preferred matrix used by levine_map.
MockSeifertMatrix levine_matrix(const Diagram& d);

struct IsometricStructure {
    RatMatrix q;
    RatMatrix s;
    bool reconstructible = false;
    bool isometry_verified = false;
    bool reconstruction_verified = false;
};

IsometricStructure isometric_structure(const MockSeifertMatrix& a);

/// A_k = [[k, 1], [-1, k]].
MockSeifertMatrix a_k(int k);
/// Diag(-p, q).
MockSeifertMatrix diag_pq(const Int& p, const Int& q);

}  // namespace mgl
