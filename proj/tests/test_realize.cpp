#include "oracles.hpp"

#include "mockgl/invariants.hpp"
#include "mockgl/realize.hpp"

#include <gtest/gtest.h>

using namespace mgl;

TEST(Realize, TorusKnotAnnulus) {
    const auto b = realize(IntMatrix{{3}});
    EXPECT_EQ(b.n_bands, 1);
    EXPECT_EQ(b.twists, std::vector<Int>{3});
    EXPECT_TRUE(b.crossings.empty());
    EXPECT_EQ(matrix_of_band_presentation(b).entries, IntMatrix{{3}});
}

TEST(Realize, BaseCase) {
    const IntMatrix a{{-3, -2}, {0, -1}};
    const auto b = realize(a);
    EXPECT_EQ(b.feet, FeetKind::Unlinked);
    EXPECT_EQ(matrix_of_band_presentation(b).entries, a);
    EXPECT_EQ(boundary_components(b), 1);
}

TEST(Realize, EvenDeterminantRejected) {
    EXPECT_THROW(realize(IntMatrix{{2, 4}, {0, 2}}), PreconditionError);
    EXPECT_THROW(realize(IntMatrix{{1, 1}, {0, 1}}), PreconditionError);
}

TEST(Realize, HyperbolicType) {
    const IntMatrix a{{2, 1}, {-1, 2}};
    const auto b = realize(a);
    EXPECT_EQ(b.feet, FeetKind::AlternatingPairs);
    const auto m = matrix_of_band_presentation(b);
    EXPECT_EQ(m.entries, a);
    EXPECT_EQ(*m.euler, 0);
}

TEST(Realize, RandomRoundTrip) {
    std::mt19937 rng(41);
    for (int it = 0; it < 120; ++it) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const IntMatrix a = oracle::random_odd_det(rng, n);
        const auto b = realize(a);
        EXPECT_EQ(boundary_components(b), 1);
        const auto m = matrix_of_band_presentation(b);
        EXPECT_EQ(m.entries, a);
        ASSERT_TRUE(m.euler);
        if (MockSeifertMatrix(a).type() == FormType::Odd) EXPECT_EQ(pos_mod(*m.euler - 2 * n, Int(4)), 0);
        else EXPECT_EQ(*m.euler, 0);
        EXPECT_NE(delta_one_check(m).kind, DeltaOneCheck::Kind::Violation);
    }
}
