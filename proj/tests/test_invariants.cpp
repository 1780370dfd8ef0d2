#include "oracles.hpp"

#include "mockgl/concord.hpp"
#include "mockgl/invariants.hpp"

#include <gtest/gtest.h>

using namespace mgl;

namespace {

MockSeifertMatrix M(std::initializer_list<std::initializer_list<Int>> rows, std::optional<Int> e = std::nullopt) {
    return MockSeifertMatrix(IntMatrix(rows), e);
}

const MockSeifertMatrix k6 = M({{0, -1, 1, 0}, {-1, 2, 1, 0}, {-1, 1, 0, 1}, {0, 0, 1, 2}});

std::complex<double> cplx(const CirclePoint& w) {
    return {w.a.convert_to<double>() / w.c.convert_to<double>(), w.b.convert_to<double>() / w.c.convert_to<double>()};
}

}  // namespace

TEST(Invariants, AlexanderExamples) {
    EXPECT_EQ(alexander(M({{-3, -2}, {0, -1}})), parse_laurent("3t^2 - 2t + 3"));
    EXPECT_EQ(alexander(k6), parse_laurent("5t^4 - 4t^3 - 2t^2 - 4t + 5"));
    EXPECT_EQ(alexander(M({{7}})), parse_laurent("7t - 7"));
    EXPECT_EQ(alexander(MockSeifertMatrix(IntMatrix(0, 0))), LaurentPoly::constant(1));
}

TEST(Invariants, AlexanderMatchesCofactorOracle) {
    std::mt19937 rng(21);
    for (int it = 0; it < 100; ++it) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const IntMatrix a = oracle::random_matrix(rng, n, -4, 4);
        const LaurentPoly d = alexander(a);
        for (int t = -3; t <= 3; ++t) EXPECT_EQ(d.eval(Int(t)), oracle::alexander_at(a, t));
    }
}

TEST(Invariants, GlExamples) {
    const auto g = gl_invariants(M({{3}}, Int(-2)));
    EXPECT_EQ(g.sig_part, 1);
    EXPECT_EQ(*g.sigma, 0);
    EXPECT_EQ(g.det, 3);
    EXPECT_EQ(g.nullity, 0);
    const auto h = gl_invariants(M({{1, 0}, {0, -1}}));
    EXPECT_EQ(h.sig_part, 0);
    EXPECT_EQ(h.det, 1);
    EXPECT_FALSE(h.sigma);
    const auto k = gl_invariants(M({{-3, -2}, {0, -1}}));
    EXPECT_EQ(k.det, 2);
    EXPECT_EQ(k.sig_part, -2);
}

TEST(Invariants, LtSignatureExamples) {
    for (int k : {2, 4, 6}) EXPECT_EQ(lt_signature(a_k(k), CirclePoint::minus_one()).sig_part, 2);
    const auto d = M({{1, 0}, {0, -1}});
    for (int u = 1; u < 6; ++u) EXPECT_EQ(lt_signature(d, CirclePoint::pythagorean(u, u + 1)).sig_part, 0);
    EXPECT_THROW(lt_signature(d, CirclePoint::make(1, 0, 1)), PreconditionError);
    const auto at_jump = lt_signature(k6, CirclePoint::make(-3, 4, 5));
    EXPECT_TRUE(at_jump.singular());
}

TEST(Invariants, LtSignatureMatchesEigenOracle) {
    std::mt19937 rng(22);
    for (int it = 0; it < 120; ++it) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const MockSeifertMatrix a(oracle::random_matrix(rng, n, -4, 4));
        const auto [u, v] = oracle::random_pythagorean(rng);
        const CirclePoint w = CirclePoint::pythagorean(u, v);
        if (w.is_one()) continue;
        const auto lt = lt_signature(a, w);
        const auto o = oracle::hermitian_signature(a.entries, cplx(w));
        EXPECT_EQ(lt.nullity, o.nullity);
        if (o.nullity == 0) EXPECT_EQ(lt.sig_part, o.signature);
    }
}

TEST(Invariants, SignatureFunctionOf678358) {
    const auto sf = signature_function(k6);
    ASSERT_EQ(sf.jumps.size(), 2u);
    std::set<std::string> pts;
    for (const auto& j : sf.jumps) {
        ASSERT_TRUE(j.exact);
        pts.insert(j.exact->to_text());
    }
    EXPECT_EQ(pts, (std::set<std::string>{"(-3+4i)/5", "(-3-4i)/5"}));
    ASSERT_EQ(sf.arc_values.size(), 3u);
    EXPECT_EQ(sf.arc_values[0], sf.arc_values[2]);
    EXPECT_EQ(std::abs(sf.arc_values[1] - sf.arc_values[0]), 2);
    EXPECT_EQ(oracle::hermitian_signature(k6.entries, {-1.0, 0.0}).signature, sf.arc_values[1]);
    EXPECT_EQ(oracle::hermitian_signature(k6.entries, {0.0, 1.0}).signature, sf.arc_values[0]);
    EXPECT_EQ(average_signature(k6, CirclePoint::make(-3, 4, 5)), Rat(sf.arc_values[0] + sf.arc_values[1], 2));
}

TEST(Invariants, SignatureFunctionOfAk) {
    for (int k : {2, 4, 6, 8}) {
        const auto sf = signature_function(a_k(k));
        ASSERT_EQ(sf.jumps.size(), 2u) << k;
        std::set<std::string> pts;
        for (const auto& j : sf.jumps) pts.insert(j.exact->to_text());
        const int a = k * k - 1, b = 2 * k, c = k * k + 1;
        const std::string up = "(" + std::to_string(a) + "+" + std::to_string(b) + "i)/" + std::to_string(c);
        const std::string lo = "(" + std::to_string(a) + "-" + std::to_string(b) + "i)/" + std::to_string(c);
        EXPECT_EQ(pts, (std::set<std::string>{up, lo}));
        EXPECT_EQ(average_signature(a_k(k), CirclePoint::make(a, b, c)), 1);
    }
}

TEST(Invariants, SymmetricMatrixHasConstantSignature) {
    const auto sf = signature_function(M({{2, 1}, {1, 3}}));
    EXPECT_TRUE(sf.jumps.empty());
    ASSERT_EQ(sf.arc_values.size(), 1u);
    EXPECT_EQ(sf.arc_values[0], 2);
}

TEST(Invariants, ArcSamplesAgreeWithLt) {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 * (1 + static_cast<int>(rng() % 3));
        const MockSeifertMatrix a(oracle::random_matrix(rng, n, -3, 3));
        const auto sf = signature_function(a);
        if (sf.degenerate) continue;
        ASSERT_EQ(sf.samples.size(), sf.arc_values.size());
        for (std::size_t i = 0; i < sf.samples.size(); ++i) {
            const auto lt = lt_signature(a, sf.samples[i]);
            EXPECT_FALSE(lt.singular());
            EXPECT_EQ(lt.sig_part, sf.arc_values[i]);
            EXPECT_EQ(sf.arc_values[i] % 2 == 0, n % 2 == 0);
            const auto o = oracle::hermitian_signature(a.entries, cplx(sf.samples[i]));
            EXPECT_EQ(o.signature, sf.arc_values[i]);
        }
        for (std::size_t i = 1; i < sf.arc_values.size(); ++i)
            EXPECT_EQ((sf.arc_values[i] - sf.arc_values[i - 1]) % 2, 0);
    }
}

TEST(Invariants, DeltaOne) {
    EXPECT_EQ(delta_one_check(M({{3}})).kind, DeltaOneCheck::Kind::OkOdd);
    const auto a2 = delta_one_check(a_k(2));
    EXPECT_EQ(a2.kind, DeltaOneCheck::Kind::OkEvenSquare);
    EXPECT_EQ(a2.value, 4);
    const auto k = delta_one_check(k6);
    EXPECT_EQ(k.kind, DeltaOneCheck::Kind::OkEvenSquare);
    EXPECT_EQ(k.value % 16, 0);
    EXPECT_EQ(k.value, oracle::cofactor_det(IntMatrix(k6.entries - k6.entries.transpose())));
}

TEST(Invariants, Bounds) {
    EXPECT_EQ(bounds(M({{-3, -2}, {0, -1}})).crosscap_lower, 2);
    EXPECT_EQ(bounds(M({{1, 0, -1}, {0, 1, -1}, {1, 1, 1}})).crosscap_lower, 2);
    EXPECT_EQ(bounds(M({{3}})).crosscap_lower, 0);
    const auto b = bounds(k6);
    ASSERT_TRUE(b.genus_lower);
    EXPECT_EQ(*b.genus_lower, 1);
}

TEST(Invariants, CirclePointParsing) {
    EXPECT_EQ(parse_circle_point("(-3+4i)/5"), CirclePoint::make(-3, 4, 5));
    EXPECT_EQ(parse_circle_point("-1"), CirclePoint::minus_one());
    EXPECT_EQ(parse_circle_point("3,4,5"), CirclePoint::make(3, 4, 5));
    EXPECT_THROW(parse_circle_point("1,1,1"), PreconditionError);
}
