#include <random>

#include <gtest/gtest.h>

#include <ncgeode/io.hpp>
#include <ncgeode/lagrange.hpp>
#include <ncgeode/ncsf.hpp>

#include "support.hpp"

using namespace ncgeode;
using IS = Series<Integer>;

namespace {

IS parse_s(const std::string& text, int N)
{
    IS s(Basis::S, N);
    for (const auto& [c, v] : parse_component<Integer>(text).terms)
        s.add(c, v);
    return s;
}

Homogeneous<Integer> component(const std::string& text) { return parse_component<Integer>(text).terms; }

// Lambda_n = sum over compositions I of n of (-1)^{n - l(I)} S^I, multiplied out.
IS lambda_element_in_s(const Composition& J, int N)
{
    IS r = IS::one(N);
    for (int j : J.parts()) {
        IS f(Basis::S, N);
        for (const auto& I : oracle::all_compositions(j))
            f.add(I, (j - I.length()) % 2 == 0 ? 1 : -1);
        r = r * f;
    }
    return r;
}

// R_J = sum over I coarser than J of (-1)^{l(J) - l(I)} S^I.
IS ribbon_element_in_s(const Composition& J, int N)
{
    IS r(Basis::S, N);
    int n = J.weight();
    std::uint32_t mj = oracle::descent_mask(J);
    for (std::uint32_t sub = mj;; sub = (sub - 1) & mj) {
        Composition I = oracle::from_mask(n, sub);
        r.add(I, (J.length() - I.length()) % 2 == 0 ? 1 : -1);
        if (sub == 0)
            break;
    }
    return r;
}

IS random_unit(std::mt19937& rng, int N) { return oracle::random_series(rng, N, true); }

} // namespace

TEST(SeriesArithmetic, Examples)
{
    const int N = 4;
    EXPECT_EQ(IS::monomial({1}, 1, N) * IS::monomial({2}, 1, N), IS::monomial({1, 2}, 1, N));
    IS one_plus = IS::one(N) + IS::monomial({1}, 1, N);
    EXPECT_EQ(one_plus * one_plus, parse_s("1 + 2S_1 + S^{11}", N));
    IS g = lagrange_series(N);
    EXPECT_EQ((g * g)[2], component("2S_2 + 3S^{11}"));
    EXPECT_EQ(inverse(one_plus), parse_s("1 - S_1 + S^{11} - S^{111} + S^{1111}", N));
    EXPECT_EQ((IS::one(N) - inverse(g))[2], component("S_2"));
    EXPECT_EQ(inverse(IS::sigma(N))[2], component("S^{11} - S_2"));
    EXPECT_EQ(power(g, 0), IS::one(N));
    EXPECT_EQ(power(g, 2)[1], component("2S_1"));
    EXPECT_EQ(power(g, -1)[1], component("-S_1"));
}

TEST(SeriesArithmetic, InverseAndPowersRandom)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        IS u = random_unit(rng, 6), v = random_unit(rng, 6);
        EXPECT_EQ(u * inverse(u), IS::one(6));
        EXPECT_EQ(inverse(u) * u, IS::one(6));
        EXPECT_EQ(inverse(u * v), inverse(v) * inverse(u));
        EXPECT_EQ(power(u, 3), u * u * u);
        EXPECT_EQ(power(u, -2), inverse(u * u));
    }
}

TEST(PowerBinomial, Examples)
{
    auto gt = t_lagrange_series(3);
    auto gpow = power_binomial(gt, PolyT::t());
    EXPECT_EQ(gpow[1], parse_component<PolyT>("tS_1").terms);
    EXPECT_EQ(gpow[2], parse_component<PolyT>("tS_2 + ((3t^2-t)/2)S^{11}").terms);
}

TEST(PowerBinomial, AgreesWithIntegerPowers)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        IS u = random_unit(rng, 6);
        auto up = series_cast<PolyT>(u);
        for (int k = 0; k <= 4; ++k)
            EXPECT_EQ(power_binomial(up, PolyT(k)), series_cast<PolyT>(power(u, k))) << k;
    }
}

TEST(Annihilate, Examples)
{
    IS g = lagrange_series(3);
    EXPECT_EQ(annihilate(g, 1)[2], component("2S_2 + S^{11}"));
    EXPECT_TRUE(annihilate(IS::monomial({1, 2}, 1, 3), 1)[2].empty());
    IS s2 = convert_basis(IS::monomial({2}, 1, 2), Basis::Lambda);
    EXPECT_EQ(s2[2], parse_component<Integer>("L^{11} - L^{2}").terms);
    EXPECT_TRUE(annihilate(s2, 1)[1].empty());
    EXPECT_THROW(annihilate(s2, 2), basis_mismatch);
}

TEST(ConvertBasis, Examples)
{
    IS gamma = geode(3);
    EXPECT_EQ(convert_basis(gamma, Basis::R)[3], parse_component<Integer>("9R_{3} + 4R_{21} + 3R_{12} + R_{111}").terms);
    EXPECT_EQ(convert_basis(gamma, Basis::Lambda)[3],
              parse_component<Integer>("3L^{3} - 6L^{21} - 5L^{12} + 9L^{111}").terms);
}

TEST(ConvertBasis, MatchesProductExpansionOracles)
{
    const int N = 6;
    for (int n = 1; n <= N; ++n)
        for (const auto& J : oracle::all_compositions(n)) {
            EXPECT_EQ(convert_basis(IS::monomial(J, 1, N, Basis::Lambda), Basis::S), lambda_element_in_s(J, N))
                << J.label();
            EXPECT_EQ(convert_basis(IS::monomial(J, 1, N, Basis::R), Basis::S), ribbon_element_in_s(J, N)) << J.label();
        }
}

TEST(ConvertBasis, RoundTripsAreIdentity)
{
    const int N = 8;
    const Basis bases[] = {Basis::S, Basis::R, Basis::Lambda};
    for (int n = 0; n <= N; ++n)
        for (const auto& J : oracle::all_compositions(n))
            for (Basis from : bases)
                for (Basis to : bases) {
                    IS u = IS::monomial(J, 1, n, from);
                    EXPECT_EQ(convert_basis(convert_basis(u, to), from), u);
                }
}

TEST(Annihilate, CommutesWithConversion)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        IS u = oracle::random_series(rng, 8);
        for (int n = 1; n <= 3; ++n)
            EXPECT_EQ(convert_basis(annihilate(u, n), Basis::R), annihilate(convert_basis(u, Basis::R), n));
        EXPECT_EQ(convert_basis(annihilate(u, 1), Basis::Lambda), annihilate(convert_basis(u, Basis::Lambda), 1));
    }
}

// (u v) S_1^{-1} = u (v S_1^{-1}) + (u S_1^{-1}) v_0
TEST(Annihilate, DerivationRule)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        IS u = oracle::random_series(rng, 6), v = oracle::random_series(rng, 6);
        IS lhs = annihilate(u * v, 1);
        IS rhs = u.truncated(5) * annihilate(v, 1) + v.constant_term() * annihilate(u, 1);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(NegateAlphabet, Examples)
{
    EXPECT_EQ(negate_alphabet(IS::monomial({1}, 1, 2))[1], component("-S_1"));
    EXPECT_EQ(negate_alphabet(IS::monomial({2}, 1, 2))[2], component("S^{11} - S_2"));
    EXPECT_EQ(inverse(negate_alphabet(lagrange_series(2)))[2], component("S_2 - S^{11}"));
}

TEST(NegateAlphabet, IsInvolutiveAlgebraMorphism)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        IS u = oracle::random_series(rng, 6), v = oracle::random_series(rng, 6);
        EXPECT_EQ(negate_alphabet(negate_alphabet(u)), u);
        EXPECT_EQ(negate_alphabet(u * v), negate_alphabet(u) * negate_alphabet(v));
    }
}

TEST(Phi, ExamplesAndMorphism)
{
    EXPECT_EQ(phi(IS::monomial({4, 2}, 1, 6), 2), IS::monomial({2, 1}, 1, 3));
    EXPECT_TRUE(phi(IS::monomial({2, 1}, 1, 4), 2)[1].empty());
    EXPECT_EQ(phi(lagrange_series(6), 2).coefficient({2, 1}), Integer(4));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        IS u = oracle::random_series(rng, 8), v = oracle::random_series(rng, 8);
        EXPECT_EQ(phi(u * v, 2), phi(u, 2) * phi(v, 2));
    }
}

TEST(LagrangeTransform, ExamplesAndMorphism)
{
    IS g = lagrange_series(6);
    EXPECT_EQ(lagrange_transform(g, IS::monomial({2}, 1, 2))[2], component("S_2 + S^{11}"));
    EXPECT_EQ(lagrange_transform(g, IS::monomial({1, 1}, 1, 2))[2], component("S^{11}"));
    EXPECT_EQ(lagrange_transform(g, IS::sigma(2))[2], g[2]);
    // L(g) = g^(2)
    EXPECT_EQ(lagrange_transform(g, g.truncated(2))[2], component("S_2 + 2S^{11}"));
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        IS u = oracle::random_series(rng, 6), v = oracle::random_series(rng, 6);
        EXPECT_EQ(lagrange_transform(g, u * v), lagrange_transform(g, u) * lagrange_transform(g, v));
        EXPECT_EQ(lagrange_transform(g, u + v), lagrange_transform(g, u) + lagrange_transform(g, v));
    }
}

TEST(RightDivide, Examples)
{
    IS g = lagrange_series(3);
    IS one = IS::one(3);
    EXPECT_EQ(right_divide(g - one, IS::sigma(3) - one)[2], component("2S_2 + S^{11}"));
    IS u = g - one;
    EXPECT_EQ(right_divide(u, u), IS::one(2));
    auto gt = t_lagrange_series(3);
    auto pone = Series<PolyT>::one(3);
    EXPECT_EQ(right_divide(gt - pone, shift_t(gt, -1) - pone)[2], parse_component<PolyT>("2S_2 + (2t-1)S^{11}").terms);
    EXPECT_THROW(right_divide(IS::monomial({1, 2}, 1, 3), IS::monomial({1}, 1, 3)), not_divisible);
}

TEST(RightDivide, QuotientTimesDivisorRecoversDividend)
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        IS theta = oracle::random_series(rng, 6);
        IS u = oracle::random_series(rng, 6);
        u = u - u.constant_term() * IS::one(6);
        u.component(1).clear();
        u.add({1}, trial % 2 ? 1 : -1);
        IS v = theta * u;
        IS q = right_divide(v, u);
        EXPECT_EQ(q, theta.truncated(5));
        EXPECT_EQ(q * u.truncated(5), v.truncated(5));
    }
}

// [L^I]g = (-1)^{|I| - l(I)} [R_{I~}]g, with I~ the conjugate.
TEST(SignConjugation, HoldsForLagrangeSeries)
{
    const int N = 7;
    IS g = lagrange_series(N);
    IS gl = convert_basis(g, Basis::Lambda);
    for (int n = 1; n <= N; ++n) {
        auto ribbons = oracle::ribbon_coefficients(g[n], n);
        for (const auto& I : oracle::all_compositions(n)) {
            Integer r = ribbons.count(conjugate(I)) ? ribbons[conjugate(I)] : Integer(0);
            Integer sign = (n - I.length()) % 2 == 0 ? 1 : -1;
            EXPECT_EQ(gl.coefficient(I), sign * r) << I.label();
        }
    }
}
