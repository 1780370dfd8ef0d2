#include "oracles.hpp"

#include "mockgl/carrier.hpp"

#include <gtest/gtest.h>

using namespace mgl;

namespace {

bool skew(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

}  // namespace

TEST(Carrier, Unknot) {
    const auto s = build_carrier(parse_gauss(""));
    EXPECT_EQ(s.genus, 0);
    EXPECT_EQ(s.faces.size(), 2u);
}

TEST(Carrier, ClassicalTrefoil) {
    const auto s = build_carrier(parse_gauss("O1+U2+O3+U1+O2+U3+"));
    EXPECT_EQ(s.genus, 0);
    EXPECT_EQ(s.faces.size(), 5u);
    EXPECT_EQ(s.euler_characteristic, 2);
    const auto data = face_cycle_pairing(s);
    for (int i = 0; i < data.pairing.rows(); ++i)
        for (int j = 0; j < data.pairing.cols(); ++j) EXPECT_EQ(data.pairing(i, j), 0);
}

TEST(Carrier, VirtualTrefoilTorus) {
    const auto s = build_carrier(parse_gauss("O1+O2+U1+U2+"));
    EXPECT_EQ(s.genus, 1);
    EXPECT_EQ(s.faces.size(), 2u);
    const auto data = face_cycle_pairing(s);
    ASSERT_EQ(data.pairing.rows(), 2);
    EXPECT_TRUE(skew(data.pairing));
    EXPECT_EQ(iabs(data.pairing(0, 1)), 1);
}

TEST(Carrier, RandomDiagramsConsistent) {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
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
        const auto s = build_carrier(d);
        EXPECT_EQ(s.euler_characteristic, n - 2 * n + static_cast<int>(s.faces.size()));
        EXPECT_EQ(2 - 2 * s.genus, s.euler_characteristic);
        // every arc side lies on exactly one face walk
        std::size_t sides = 0;
        for (const auto& f : s.faces) sides += f.size();
        EXPECT_EQ(sides, 4u * n);
        const auto data = face_cycle_pairing(s);
        EXPECT_TRUE(skew(data.pairing));
        EXPECT_EQ(data.pairing.rows(), 2 * s.genus);
        if (data.pairing.rows() > 0) EXPECT_EQ(iabs(det(data.pairing)), 1);
        EXPECT_EQ(oracle::gf2_rank(data.pairing), 2 * s.genus);
        // naturality under relabelling
        const auto r = build_carrier(canonical_labels(d));
        EXPECT_EQ(r.genus, s.genus);
    }
}
