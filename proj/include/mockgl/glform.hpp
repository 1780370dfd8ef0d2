#pragma once

#include "mockgl/carrier.hpp"
#include "mockgl/gauss.hpp"
#include "mockgl/seifert.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mgl {

struct BandCrossing {
    int over = 0;
    int under = 0;
    int sign = 1;
    friend bool operator==(const BandCrossing&, const BandCrossing&) = default;
};

enum class FeetKind { AlternatingPairs, Unlinked, Mixed };

struct BandPresentation {
    int n_bands = 0;
    FeetKind feet = FeetKind::Unlinked;
    /// Cyclic order of band feet around the disk; each band occurs twice. Required for Mixed.
    std::vector<int> feet_order;
    std::vector<Int> twists;
    std::vector<BandCrossing> crossings;
    /// Optional change of basis: column j expresses the j-th basis curve in the band cores.
    std::optional<IntMatrix> basis;

    /// Feet order actually used (expanded from the pattern tag).
    std::vector<int> resolved_feet() const;
    friend bool operator==(const BandPresentation&, const BandPresentation&) = default;
};

std::string to_string(FeetKind k);

/// Number of boundary circles of the disk-with-bands surface.
int boundary_components(const BandPresentation& b);
/// Throws PreconditionError when the presentation is malformed or its boundary is not one circle.
void validate(const BandPresentation& b);

MockSeifertMatrix matrix_of_band_presentation(const BandPresentation& b);
Int euler_of_band_presentation(const BandPresentation& b);

struct Tube {};
struct HalfBand {
    int sign = 1;
};

MockSeifertMatrix s_star_move(const MockSeifertMatrix& a, Tube);
MockSeifertMatrix s_star_move(const MockSeifertMatrix& a, HalfBand h);

/// Two-colouring of the carrier faces; empty when the diagram is not checkerboard colourable.
std::optional<std::vector<int>> face_coloring(const CarrierSurface& s);

struct CheckerboardSurface {
    int color = 0;
    bool preferred = false;
    std::vector<int> faces;
    /// Tait-graph fundamental cycles as crossing coefficient vectors (indexed like Diagram::crossings).
    std::vector<std::vector<int>> cycles;
    MockSeifertMatrix matrix;
};

std::vector<CheckerboardSurface> checkerboard_surfaces(const Diagram& d);
std::pair<MockSeifertMatrix, MockSeifertMatrix> checkerboard_matrices(const Diagram& d);
/// Matrix of the surface coloured like the region to the left of the basepoint.
MockSeifertMatrix preferred_matrix(const Diagram& d);

namespace detail {
MockSeifertMatrix checkerboard_matrix(const Diagram& d, const CarrierSurface& s, const std::vector<int>& coloring,
                                      int color, int goeritz_sign, int skew_sign,
                                      std::vector<std::vector<int>>* cycles = nullptr);
}

}  // namespace mgl
