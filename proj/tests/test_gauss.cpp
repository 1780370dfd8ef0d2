#include "oracles.hpp"

#include "mockgl/gauss.hpp"

#include <gtest/gtest.h>

using namespace mgl;

TEST(Gauss, EmptyCodeIsUnknot) {
    const Diagram d = parse_gauss("");
    EXPECT_EQ(d.size(), 0);
    EXPECT_TRUE(d.passages.empty());
    EXPECT_EQ(colorability(d), Colorability::AlmostClassical);
}

TEST(Gauss, ParsesVirtualTrefoil) {
    const Diagram d = parse_gauss("O1+O2+U1+U2+");
    EXPECT_EQ(d.size(), 2);
    EXPECT_EQ(d.passages.size(), 4u);
    EXPECT_EQ(to_gauss(d), "O1+O2+U1+U2+");
}

TEST(Gauss, ParsesKinkWithUnicodeMinus) {
    const Diagram d = parse_gauss("O1−U1−");
    ASSERT_EQ(d.size(), 1);
    EXPECT_EQ(d.crossings[0].sign, -1);
    EXPECT_EQ(crossing_indices(d).at(1), 0);
}

TEST(Gauss, WhitespaceAndCaseInsensitive) {
    EXPECT_EQ(parse_gauss(" o1+ u2+ O3+U1+ o2+U3+ "), parse_gauss("O1+U2+O3+U1+O2+U3+"));
}

TEST(Gauss, RejectsMalformed) {
    EXPECT_THROW(parse_gauss("X1+"), ParseError);
    EXPECT_THROW(parse_gauss("O1"), ParseError);
    EXPECT_THROW(parse_gauss("O+"), ParseError);
    EXPECT_THROW(parse_gauss("O1+O1+"), ParseError);
    EXPECT_THROW(parse_gauss("O1+U2+"), ParseError);
    EXPECT_THROW(parse_gauss("O1+U1-"), ParseError);
}

TEST(Gauss, VirtualTrefoilIndices) {
    const Diagram d = parse_gauss("O1+O2+U1+U2+");
    const auto ind = crossing_indices(d);
    EXPECT_EQ(ind.at(1), 1);
    EXPECT_EQ(ind.at(2), -1);
    EXPECT_EQ(ind, oracle::smoothing_indices(d));
    EXPECT_EQ(colorability(d), Colorability::Neither);
    EXPECT_EQ(odd_writhe(d), 2);
}

TEST(Gauss, ClassicalTrefoil) {
    const Diagram d = parse_gauss("O1+U2+O3+U1+O2+U3+");
    for (const auto& [l, v] : crossing_indices(d)) EXPECT_EQ(v, 0) << l;
    EXPECT_EQ(colorability(d), Colorability::AlmostClassical);
    EXPECT_EQ(odd_writhe(d), 0);
    EXPECT_EQ(writhe(d), 3);
}

TEST(Gauss, Knot37IsCheckerboardColorable) {
    const Diagram d = parse_gauss("O1-U2-O3+U1-O2-U3+");
    EXPECT_EQ(colorability(d), Colorability::CheckerboardColorable);
    EXPECT_EQ(odd_writhe(d), 0);
}

TEST(Gauss, ColorabilityOrdering) {
    EXPECT_GT(Colorability::AlmostClassical, Colorability::CheckerboardColorable);
    EXPECT_GT(Colorability::CheckerboardColorable, Colorability::Neither);
}

TEST(Gauss, IndicesMatchOracleOnRandomCodes) {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        const int n = 1 + static_cast<int>(rng() % 7);
        std::vector<int> labels;
        for (int l = 1; l <= n; ++l) labels.insert(labels.end(), {l, l});
        std::shuffle(labels.begin(), labels.end(), rng);
        std::map<int, int> signs;
        std::map<int, bool> seen;
        std::vector<Passage> ps;
        for (int l : labels) {
            if (!seen.count(l)) seen[l] = rng() % 2;
            else seen[l] = !seen[l];
            ps.push_back({l, seen[l]});
            signs[l] = rng() % 2 ? 1 : -1;
        }
        const Diagram d = make_diagram(ps, signs);
        const auto ind = crossing_indices(d);
        EXPECT_EQ(ind, oracle::smoothing_indices(d)) << to_gauss(d);
        EXPECT_EQ(parse_gauss(to_gauss(d)), d);
        int ow = 0;
        for (const auto& c : d.crossings)
            if (ind.at(c.label) % 2) ow += c.sign;
        EXPECT_EQ(odd_writhe(d), ow);
        if (colorability(d) >= Colorability::CheckerboardColorable) EXPECT_EQ(odd_writhe(d), 0);
        // relabelling and rotation do not change the index multiset
        const Diagram r = rotate(canonical_labels(d), 3);
        std::multiset<int> a, b;
        for (const auto& [l, v] : ind) a.insert(v);
        for (const auto& [l, v] : crossing_indices(r)) b.insert(v);
        EXPECT_EQ(a, b);
    }
}

TEST(Gauss, DetourInsertionKeepsIndices) {
    // adding a Reidemeister I kink elsewhere leaves the other indices unchanged
    const Diagram d = parse_gauss("O1-U2-O3+U1-O2-U3+");
    const Diagram k = parse_gauss("O1-U2-O3+O9+U9+U1-O2-U3+");
    const auto a = crossing_indices(d), b = crossing_indices(k);
    for (const auto& [l, v] : a) EXPECT_EQ(b.at(l), v);
    EXPECT_EQ(b.at(9), 0);
}
