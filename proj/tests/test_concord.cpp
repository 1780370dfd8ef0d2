#include "oracles.hpp"

#include "mockgl/concord.hpp"

#include <gtest/gtest.h>

using namespace mgl;

TEST(Concord, IdentityClass) {
    const auto e = identity_class();
    EXPECT_EQ(e.representative.size(), 0);
    EXPECT_TRUE(e.bundle.metabolic.certificate());
    EXPECT_EQ(order_bound(e).kind, OrderBound::Kind::One);
}

TEST(Concord, ClassOfRequiresAdmissibility) {
    EXPECT_THROW(class_of(MockSeifertMatrix(IntMatrix{{3}})), PreconditionError);
    EXPECT_THROW(class_of(diag_pq(5, 13)), PreconditionError);
    const auto c = class_of(diag_pq(5, 13), true);
    EXPECT_TRUE(c.waived);
    const auto a2 = class_of(a_k(2));
    EXPECT_EQ(lt_signature(a2.representative, CirclePoint::minus_one()).sig_part, 2);
    EXPECT_TRUE(a2.bundle.signature.any_nonzero());
}

TEST(Concord, GroupOperations) {
    const auto x = class_of(a_k(2));
    EXPECT_TRUE(group_op(x, inverse(x)).bundle.metabolic.certificate());
    const auto y = class_of(a_k(4));
    const auto xy = group_op(x, y);
    EXPECT_EQ(xy.bundle.alexander, x.bundle.alexander * y.bundle.alexander);
    for (const auto& w : xy.bundle.signature.samples)
        EXPECT_EQ(lt_signature(xy.representative, w).sig_part,
                  lt_signature(x.representative, w).sig_part + lt_signature(y.representative, w).sig_part);
    const auto ex = group_op(identity_class(), x);
    EXPECT_EQ(ex.bundle.alexander, x.bundle.alexander);
    EXPECT_EQ(ex.bundle.signature.arc_values, x.bundle.signature.arc_values);
    EXPECT_EQ(xy.bundle.det_square_class, x.bundle.det_square_class * y.bundle.det_square_class);
}

TEST(Concord, OrderBounds) {
    EXPECT_EQ(order_bound(a_k(2)).kind, OrderBound::Kind::Infinite);
    const auto two = order_bound(diag_pq(5, 13));
    EXPECT_EQ(two.kind, OrderBound::Kind::Two);
    ASSERT_EQ(two.evidence.size(), 2u);
    EXPECT_TRUE(two.evidence[0].verdict.obstructed());
    EXPECT_TRUE(two.evidence[1].verdict.certificate());
    const auto four = order_bound(diag_pq(3, 7));
    EXPECT_EQ(four.kind, OrderBound::Kind::Four);
    EXPECT_EQ(four.lower, 4);
    MockSeifertMatrix power = diag_pq(3, 7);
    for (const auto& e : four.evidence) {
        if (e.power > 1) power = block_sum(power, power);
        if (e.verdict.certificate()) EXPECT_TRUE(oracle::is_metabolizer(power.entries, e.verdict.basis));
    }
}

TEST(Concord, ObstructionsRuleOutOrderOne) {
    std::mt19937 rng(51);
    for (int it = 0; it < 25; ++it) {
        const IntMatrix a = oracle::random_odd_det(rng, 2, -5, 5);
        const MockSeifertMatrix m(a);
        const auto ob = order_bound(m, 4);
        const auto fm = fox_milnor(alexander(m));
        if (!fm.passes || signature_function(m).any_nonzero()) EXPECT_NE(ob.kind, OrderBound::Kind::One);
    }
}

TEST(Concord, LevineMap) {
    const auto u = levine_map(parse_gauss(""));
    EXPECT_EQ(u.representative.size(), 0);
    EXPECT_TRUE(u.bundle.metabolic.certificate());
    const auto t = levine_map(parse_gauss("O1+U2+O3+U1+O2+U3+"));
    EXPECT_EQ(*t.representative.euler, 0);
    EXPECT_EQ(order_bound(t).kind, OrderBound::Kind::Infinite);
    const auto k = levine_matrix(parse_gauss("O1-U2-O3+U1-O2-U3+"));
    EXPECT_EQ(*k.euler, 0);
    // relabelling does not change the class invariants
    const auto k2 = levine_matrix(canonical_labels(parse_gauss("O3-U1-O2+U3-O1-U2+")));
    EXPECT_EQ(normalize_text(alexander(k)), normalize_text(alexander(k2)));
    const auto vt = levine_map(parse_gauss("O1+O2+U1+U2+"));
    EXPECT_EQ(vt.representative.size(), 0);
}

TEST(Concord, IsometricStructure) {
    const MockSeifertMatrix sym(IntMatrix{{2, 1}, {1, 3}});
    const auto s = isometric_structure(sym);
    EXPECT_EQ(s.s, RatMatrix::identity(2));
    EXPECT_TRUE(s.reconstruction_verified);
    const auto a2 = isometric_structure(a_k(2));
    EXPECT_TRUE(a2.isometry_verified);
    const RatMatrix g = to_rat(IntMatrix(a_k(2).entries + a_k(2).entries.transpose()));
    EXPECT_EQ(a2.s.transpose() * g * a2.s, g);
    // S = -I exactly when A is skew
    const auto skew = isometric_structure(MockSeifertMatrix(IntMatrix{{0, 1}, {-1, 0}}));
    EXPECT_FALSE(skew.reconstructible);
    EXPECT_THROW(isometric_structure(MockSeifertMatrix(IntMatrix{{1, 1}, {1, 1}})), PreconditionError);
}
