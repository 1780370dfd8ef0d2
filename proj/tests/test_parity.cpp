#include "oracles.hpp"

#include "mockgl/parity.hpp"

#include <gtest/gtest.h>

using namespace mgl;

TEST(Parity, ParseKinds) {
    EXPECT_EQ(parse_parity("mod2").n, 2);
    EXPECT_EQ(parse_parity("mod_3").n, 3);
    EXPECT_EQ(parse_parity("total").kind, ParityKind::Kind::Total);
    EXPECT_THROW(parse_parity("mod1"), ParseError);
    EXPECT_THROW(parse_parity("odd"), ParseError);
    EXPECT_THROW(ParityKind::mod(1), PreconditionError);
}

TEST(Parity, VirtualTrefoilProjectsToUnknot) {
    const Diagram d = parse_gauss("O1+O2+U1+U2+");
    EXPECT_EQ(project(d, ParityKind::mod(2)).size(), 0);
    const auto [s, it] = stable_project(d, ParityKind::mod(2));
    EXPECT_EQ(s.size(), 0);
    EXPECT_EQ(it, 1);
}

TEST(Parity, ClassicalTrefoilFixedByTotal) {
    const Diagram d = parse_gauss("O1+U2+O3+U1+O2+U3+");
    EXPECT_EQ(project(d, ParityKind::total()), d);
    const auto [s, it] = stable_project(d, ParityKind::total());
    EXPECT_EQ(s, d);
    EXPECT_EQ(it, 0);
}

TEST(Parity, ColorableFixedByMod2) {
    const Diagram d = parse_gauss("O1-U2-O3+U1-O2-U3+");
    EXPECT_EQ(project(d, ParityKind::mod(2)), d);
    EXPECT_NE(project(d, ParityKind::total()), d);
}

TEST(Parity, RelabelsConsecutively) {
    const Diagram d = parse_gauss("O1+O2+U1+U2+O3+U3+");
    const Diagram p = project(d, ParityKind::mod(2));
    ASSERT_EQ(p.size(), 1);
    EXPECT_EQ(p.crossings[0].label, 1);
}

TEST(Parity, StableProjectionProperties) {
    std::mt19937 rng(3);
    for (int it = 0; it < 300; ++it) {
        const int n = 1 + static_cast<int>(rng() % 7);
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
        for (const ParityKind p : {ParityKind::mod(2), ParityKind::mod(3), ParityKind::total()}) {
            const Diagram once = project(d, p);
            EXPECT_LE(once.size(), d.size());
            const auto [s, k] = stable_project(d, p);
            EXPECT_EQ(project(s, p), s);
            EXPECT_LE(k, d.size());
            bool all_even = true;
            for (const auto& [l, v] : oracle::smoothing_indices(d))
                if (p.odd(v)) all_even = false;
            EXPECT_EQ(once == d, all_even);
        }
    }
}
