#include <gtest/gtest.h>

#include <ncgeode/io.hpp>
#include <ncgeode/lagrange.hpp>

#include "support.hpp"

using namespace ncgeode;
using IS = Series<Integer>;

namespace {

Homogeneous<Integer> component(const std::string& text) { return parse_component<Integer>(text).terms; }
Homogeneous<PolyT> tcomponent(const std::string& text) { return parse_component<PolyT>(text).terms; }

// [S^I]g_n = number of plane trees of size n whose nonzero arities read I.
IS g_by_counting_trees(int N)
{
    IS g(Basis::S, N);
    for (int n = 0; n <= N; ++n)
        for (const auto& w : oracle::tree_codes(n))
            g.add(oracle::nonzero_part(w), 1);
    return g;
}

} // namespace

TEST(LagrangeSeries, Examples)
{
    IS g = lagrange_series(3);
    EXPECT_EQ(g[0], component("1"));
    EXPECT_EQ(g[2], component("S_2 + S^{11}"));
    EXPECT_EQ(g[3], component("S_3 + 2S^{21} + S^{12} + S^{111}"));
}

TEST(LagrangeSeries, SatisfiesDefiningEquation)
{
    const int N = 10;
    IS g = lagrange_series(N);
    IS rhs = IS::one(N);
    IS gpow = IS::one(N);
    for (int n = 1; n <= N; ++n) {
        gpow = gpow * g;
        rhs = rhs + IS::monomial({n}, 1, N) * gpow;
    }
    EXPECT_EQ(g, rhs);
}

TEST(LagrangeSeries, CountsPlaneTrees)
{
    EXPECT_EQ(lagrange_series(7), g_by_counting_trees(7));
    auto cat = oracle::catalan_numbers(10);
    IS g = lagrange_series(10);
    for (int n = 0; n <= 10; ++n) {
        Integer sum = 0;
        for (const auto& [c, v] : g[n])
            sum += v;
        EXPECT_EQ(sum, cat[n]);
    }
}

TEST(Geode, Examples)
{
    IS gamma = geode(3);
    EXPECT_EQ(gamma[0], component("1"));
    EXPECT_EQ(gamma[2], component("2S_2 + S^{11}"));
    EXPECT_EQ(gamma[3], component("3S_3 + 3S^{21} + 2S^{12} + S^{111}"));
}

TEST(Geode, RoutesAgree)
{
    const int N = 8;
    IS g = lagrange_series(N + 4);
    IS gamma = geode(g, 1).truncated(N);
    for (int k = 2; k <= 4; ++k)
        EXPECT_EQ(geode(g, k).truncated(N), gamma) << k;
    EXPECT_EQ(geode_by_division(lagrange_series(N + 1)).truncated(N), gamma);
    EXPECT_EQ(gessel_gamma(N), gamma);
    // g = 1 + gamma (sigma_1 - 1)
    IS one = IS::one(N);
    EXPECT_EQ(one + gamma * (IS::sigma(N) - one), g.truncated(N));
}

// [S^I]gamma_n is the total number of trailing zeros over trees with arities I.
TEST(Geode, TrailingZeroOracle)
{
    const int N = 7;
    IS oracle_gamma(Basis::S, N);
    for (int n = 0; n <= N; ++n)
        for (const auto& w : oracle::tree_codes(n))
            oracle_gamma.add(oracle::nonzero_part(w), oracle::trailing_zero_count(w));
    EXPECT_EQ(geode(N), oracle_gamma);
    EXPECT_EQ(geode_from_trees(N), oracle_gamma);
    EXPECT_EQ(geode_from_shift_words(N), oracle_gamma);
}

TEST(Geode, CoefficientSums)
{
    const std::vector<Integer> want = {1, 1, 3, 9, 28, 90, 297, 1001};
    IS gamma = geode(7);
    for (int n = 0; n <= 7; ++n) {
        Integer s = 0;
        for (const auto& [c, v] : gamma[n])
            s += v;
        EXPECT_EQ(s, want[n]);
    }
}

TEST(PrimeSeries, Examples)
{
    auto p = prime_series(lagrange_series(6));
    EXPECT_EQ(p.h[2], component("S_2"));
    EXPECT_EQ(p.h[3], component("S_3 + S^{21}"));
    EXPECT_EQ(p.eta[2], component("S_2"));
    EXPECT_EQ(p.h.coefficient({4, 2}), Integer(3));
    EXPECT_EQ(p.eta.constant_term(), Integer(1));
}

// [S^I]h counts trees whose last root subtree is a single leaf.
TEST(PrimeSeries, CountsPrimeTrees)
{
    const int N = 7;
    IS oracle_h(Basis::S, N);
    for (int n = 1; n <= N; ++n)
        for (const auto& w : oracle::tree_codes(n)) {
            // skip the root's subtrees one by one; remember where the last starts
            std::size_t i = 1, last = 1;
            while (i < w.size()) {
                last = i;
                for (long need = 1; need > 0; ++i)
                    need += w[i] - 1;
            }
            if (last == w.size() - 1)
                oracle_h.add(oracle::nonzero_part(w), 1);
        }
    auto p = prime_series(lagrange_series(N));
    EXPECT_EQ(p.h, oracle_h);
}

TEST(EtaIdentities, HoldToDegreeEight)
{
    auto r = eta_identities(8);
    EXPECT_TRUE(r.gamma_is_g_eta);
    EXPECT_TRUE(r.eta_sigma_is_h);
    EXPECT_TRUE(r.eta_is_ginverse_gamma);
}

TEST(Gessel, LowDegrees)
{
    IS gamma = gessel_gamma(2);
    EXPECT_EQ(gamma[1], component("S_1"));
    EXPECT_EQ(gamma[2], component("2S_2 + S^{11}"));
}

TEST(DeltaCoefficient, Examples)
{
    EXPECT_EQ(delta_coefficient({2, 1, 1}), PolyT::parse("4t^2-t"));
    EXPECT_EQ(delta_coefficient({5}), PolyT(1));
    EXPECT_EQ(delta_coefficient({1, 1, 1, 1}), PolyT::parse("(8t^3-6t^2+t)/3"));
}

TEST(TLagrange, Examples)
{
    auto gt = t_lagrange_series(4);
    EXPECT_EQ(t_lagrange_at(gt, 1), lagrange_series(4));
    EXPECT_EQ(t_lagrange_at(gt, 0), IS::sigma(4));
    EXPECT_EQ(gt[4], tcomponent("S_4+3tS^{31}+2tS^{22}+(4t^2-t)S^{211}+tS^{13}+((5t^2-t)/2)S^{121}"
                                "+((3t^2-t)/2)S^{112}+((8t^3-6t^2+t)/3)S^{1111}"));
    auto gam = gamma_t(t_lagrange_series(3));
    EXPECT_EQ(gam[2], tcomponent("2tS_2 + ((3t^2-t)/2)S^{11}"));
    EXPECT_EQ(theta_t(gt)[2], tcomponent("2S_2 + (2t-1)S^{11}"));
    EXPECT_EQ(h_t(gt)[3], tcomponent("S_3 + tS^{21}"));
    EXPECT_EQ(h_t(gt)[4], tcomponent("S_4 + 2tS^{31} + tS^{22} + ((3t^2-t)/2)S^{211}"));
    EXPECT_EQ(eta_t(gt)[3], tcomponent("2tS_3 + ((3t^2-t)/2)S^{21}"));
}

// phi_k(g) = direct k-recursion = g^(t) at t = k; oracle: [S^I]g^(k) = [S^{kI}]g
// by counting trees.
TEST(TLagrange, IntegerSpecializationsAgree)
{
    const int N = 4;
    auto gt = t_lagrange_series(N);
    for (int k = 2; k <= 3; ++k) {
        IS viaT = t_lagrange_at(gt, k);
        EXPECT_EQ(phi(lagrange_series(k * N), k).truncated(N), viaT);
        EXPECT_EQ(k_lagrange_direct(k, N), viaT);
        IS counted = g_by_counting_trees(k * N);
        for (int n = 0; n <= N; ++n)
            for (const auto& I : oracle::all_compositions(n)) {
                std::vector<int> scaled;
                for (int p : I.parts())
                    scaled.push_back(k * p);
                EXPECT_EQ(viaT.coefficient(I), counted.coefficient(Composition(scaled))) << k << ":" << I.label();
            }
    }
}

TEST(TLagrange, ThetaAndHAtOne)
{
    auto gt = t_lagrange_series(5);
    IS g = lagrange_series(5);
    EXPECT_EQ(to_integer_series(evaluate_t(theta_t(gt), 1)), geode_by_division(g));
    EXPECT_EQ(t_lagrange_at(h_t(gt), 1), prime_series(g).h);
    EXPECT_EQ(t_lagrange_at(eta_t(gt), 1), prime_series(g).eta);
}

TEST(TLagrange, GeodeIsIndependentOfK)
{
    const int N = 4;
    auto gt = t_lagrange_series(N + 4);
    auto ref = annihilate(gt, 1).truncated(N);
    for (int k = 2; k <= 4; ++k)
        EXPECT_EQ(annihilate(gt, k).truncated(N), ref) << k;
    EXPECT_EQ(gamma_t(gt).truncated(N), ref);
}

TEST(FreeCumulants, Examples)
{
    IS K = free_cumulants(lagrange_series(3));
    EXPECT_EQ(K[2], component("S_2 - S^{11}"));
    EXPECT_EQ(K[3], component("S_3 - 2S^{21} - S^{12} + 2S^{111}"));
}

TEST(FreeCumulants, ThreeConstructionsAgree)
{
    const int N = 7;
    IS K = free_cumulants(lagrange_series(N));
    EXPECT_EQ(k_lagrange_direct(-1, N), K);
    EXPECT_EQ(t_lagrange_at(t_lagrange_series(N), -1), K);
    EXPECT_EQ(cumulant_moment_sum(K), IS::sigma(N));
}

TEST(Divisibility, QuotientsAreNonnegative)
{
    auto results = divisibility_check(3, 5);
    ASSERT_EQ(results.size(), 3u);
    EXPECT_EQ(results[0].quotient, geode(5).truncated(results[0].quotient.truncation()));
    for (const auto& r : results)
        EXPECT_TRUE(r.nonnegative) << r.k;
    EXPECT_EQ(results[1].quotient[2], component("2S_2 + 3S^{11}"));
    // theta^(k) = L^{k-1}(gamma)
    IS g = lagrange_series(5);
    IS gamma = geode(5);
    for (int k = 2; k <= 3; ++k)
        EXPECT_EQ(theta_by_transform(g, gamma, k).truncated(4), results[k - 1].quotient.truncated(4)) << k;
}

TEST(Positivity, GeodeThetaEta)
{
    EXPECT_TRUE(all_nonnegative(geode(8)));
    EXPECT_TRUE(all_nonnegative(prime_series(lagrange_series(8)).eta));
    auto gt = t_lagrange_series(5);
    for (int k = 1; k <= 3; ++k)
        EXPECT_TRUE(all_nonnegative(t_lagrange_at(theta_t(gt), k))) << k;
}

TEST(CorollaMultiset, IndependentOfK)
{
    for (int n = 0; n <= 7; ++n) {
        auto ref = corolla_removal_multiset(n, 1);
        for (int k = 2; k <= 4; ++k)
            EXPECT_EQ(corolla_removal_multiset(n, k), ref) << n << "," << k;
    }
}
