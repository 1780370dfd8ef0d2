#include "oracles.hpp"

#include "mockgl/glform.hpp"
#include "mockgl/invariants.hpp"
#include "mockgl/matalg.hpp"

#include <gtest/gtest.h>

using namespace mgl;

namespace {

BandPresentation bands(FeetKind feet, std::vector<Int> twists, std::vector<BandCrossing> cs = {}) {
    BandPresentation b;
    b.n_bands = static_cast<int>(twists.size());
    b.feet = feet;
    b.twists = std::move(twists);
    b.crossings = std::move(cs);
    return b;
}

bool symmetric(const IntMatrix& a) { return a == a.transpose(); }

}  // namespace

TEST(Glform, BandExamples) {
    const auto torus = matrix_of_band_presentation(bands(FeetKind::Unlinked, {3}));
    EXPECT_EQ(torus.entries, IntMatrix{{3}});
    EXPECT_EQ(*torus.euler, -6);
    const auto k37 = matrix_of_band_presentation(bands(FeetKind::Unlinked, {-3, -1}, {{0, 1, -1}}));
    EXPECT_EQ(k37.entries, (IntMatrix{{-3, -2}, {0, -1}}));
    EXPECT_EQ(matrix_of_band_presentation(bands(FeetKind::Unlinked, {1, 1})).entries, diag({Int(1), Int(1)}));
}

TEST(Glform, EulerExamples) {
    EXPECT_EQ(euler_of_band_presentation(bands(FeetKind::AlternatingPairs, {2, -4})), 0);
    EXPECT_EQ(euler_of_band_presentation(bands(FeetKind::AlternatingPairs, {2, 0}, {{0, 1, 1}, {1, 1, -1}})), 0);
    EXPECT_EQ(euler_of_band_presentation(bands(FeetKind::Unlinked, {1})), -2);
    EXPECT_EQ(euler_of_band_presentation(bands(FeetKind::Unlinked, {1, 1})), -4);
    EXPECT_EQ(euler_of_band_presentation(bands(FeetKind::Unlinked, {1}, {{0, 0, 1}})), -6);
}

TEST(Glform, Validation) {
    EXPECT_THROW(validate(bands(FeetKind::Unlinked, {2})), PreconditionError);
    EXPECT_THROW(validate(bands(FeetKind::AlternatingPairs, {1, 0})), PreconditionError);
    BandPresentation m = bands(FeetKind::Mixed, {0, 0});
    m.feet_order = {0, 0, 1, 1};
    EXPECT_THROW(validate(m), PreconditionError);
    EXPECT_EQ(boundary_components(m), 3);
    m.feet_order = {0, 1, 0, 1};
    EXPECT_NO_THROW(validate(m));
}

TEST(Glform, SStarMoves) {
    const MockSeifertMatrix a(IntMatrix{{3}}, Int(-6));
    const auto h = s_star_move(a, HalfBand{1});
    EXPECT_EQ(h.entries, diag({Int(3), Int(1)}));
    EXPECT_EQ(*h.euler, -8);
    const auto t = s_star_move(a, Tube{});
    EXPECT_EQ(t.entries, (IntMatrix{{3, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    EXPECT_EQ(*t.euler, -6);
    const auto e = s_star_move(MockSeifertMatrix(IntMatrix(0, 0), Int(0)), HalfBand{-1});
    EXPECT_EQ(e.entries, IntMatrix{{-1}});
    EXPECT_EQ(*e.euler, 2);
}

TEST(Glform, Knot37Surfaces) {
    const Diagram d = parse_gauss("O1-U2-O3+U1-O2-U3+");
    const auto [a, b] = checkerboard_matrices(d);
    ASSERT_EQ(a.size(), 2);
    ASSERT_EQ(b.size(), 3);
    EXPECT_TRUE(unit_equivalent(alexander(a), parse_laurent("3t^2 - 2t + 3")));
    EXPECT_EQ(alexander(b), alexander(MockSeifertMatrix(IntMatrix{{1, 0, -1}, {0, 1, -1}, {1, 1, 1}})));
    // the 2x2 surface is congruent to the published matrix
    const IntMatrix p{{1, 0}, {1, 1}};
    EXPECT_EQ(p.transpose() * a.entries * p, (IntMatrix{{-3, -2}, {0, -1}}));
    EXPECT_EQ(b.entries, (IntMatrix{{1, 0, -1}, {0, 1, -1}, {1, 1, 1}}));
}

TEST(Glform, ClassicalTrefoil) {
    const auto [a, b] = checkerboard_matrices(parse_gauss("O1+U2+O3+U1+O2+U3+"));
    for (const auto& m : {a, b}) {
        EXPECT_TRUE(symmetric(m.entries));
        EXPECT_EQ(iabs(m.det()), 3);
        EXPECT_EQ(normalize_text(alexander(m)), "3");
        EXPECT_EQ(*gl_invariants(m).sigma, -2);
    }
}

TEST(Glform, UnknotHasDiskSurface) {
    const auto surfaces = checkerboard_surfaces(parse_gauss(""));
    ASSERT_EQ(surfaces.size(), 2u);
    EXPECT_EQ(surfaces[0].matrix.size(), 0);
    EXPECT_THROW(checkerboard_matrices(parse_gauss("O1+O2+U1+U2+")), PreconditionError);
}

TEST(Glform, RandomColorableDiagrams) {
    std::mt19937 rng(31);
    int tested = 0;
    for (int it = 0; it < 4000 && tested < 150; ++it) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<int> labels;
        for (int l = 1; l <= n; ++l) labels.insert(labels.end(), {l, l});
        std::shuffle(labels.begin(), labels.end(), rng);
        std::map<int, int> signs;
        std::map<int, bool> seen;
        std::vector<Passage> ps;
        for (int l : labels) {
            seen[l] = seen.count(l) ? !seen[l] : static_cast<bool>(rng() % 2);
            ps.push_back({l, seen[l]});
            signs[l] = rng() % 2 ? 1 : -1;
        }
        const Diagram d = make_diagram(ps, signs);
        if (colorability(d) == Colorability::Neither) continue;
        ++tested;
        const auto s = build_carrier(d);
        for (const auto& surf : checkerboard_surfaces(d)) {
            const auto& m = surf.matrix;
            EXPECT_TRUE(is_odd(m.det())) << to_gauss(d);
            EXPECT_TRUE(oracle::symmetric_mod2(m.entries));
            EXPECT_NE(delta_one_check(m).kind, DeltaOneCheck::Kind::Violation);
            ASSERT_TRUE(m.euler);
            if (s.genus == 0) EXPECT_TRUE(symmetric(m.entries)) << to_gauss(d);
            EXPECT_EQ(pos_mod(*m.euler, Int(2)), 0);
        }
        // preferred surface follows the basepoint under rotation
        const auto pm = preferred_matrix(d);
        EXPECT_EQ(normalize_text(alexander(pm)), normalize_text(alexander(preferred_matrix(canonical_labels(d)))));
    }
    EXPECT_GT(tested, 50);
}
