#include <set>

#include <gtest/gtest.h>

#include <ncgeode/io.hpp>
#include <ncgeode/lagrange.hpp>
#include <ncgeode/schroeder.hpp>

#include "support.hpp"

using namespace ncgeode;

namespace {

using ES = Series<EPoly>;

Homogeneous<EPoly> ecomponent(const std::string& text) { return parse_component<EPoly>(text).terms; }

int internal_nodes(const SchroederCode& c)
{
    int k = 0;
    for (int x : c)
        k += x != 0;
    return k;
}

// Codes with labels 0 (leaf) or a >= 1 (node of arity a+1), by filtering words.
std::vector<SchroederCode> brute_schroeder(int n)
{
    std::vector<SchroederCode> out;
    for (int len = 2; len <= 2 * n + 1; ++len)
        oracle::words_with_sum(len, n, n, [&](const Word& w) {
            long need = 1;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (need <= 0)
                    return;
                need += (w[i] == 0 ? 0 : w[i] + 1) - 1;
            }
            if (need == 0)
                out.push_back(w);
        });
    return out;
}

} // namespace

TEST(SchroederTrees, Examples)
{
    auto st1 = enumerate_schroeder(1);
    ASSERT_EQ(st1.size(), 1u);
    EXPECT_EQ(word_label(st1[0]), "100");
    std::vector<std::string> pst3;
    for (const auto& c : enumerate_prime_schroeder(3))
        pst3.push_back(word_label(c));
    EXPECT_EQ(pst3, (std::vector<std::string>{"30000", "210000", "201000", "120000", "1110000", "1101000"}));
    EXPECT_THROW(enumerate_schroeder(0), std::invalid_argument);
}

TEST(SchroederTrees, CountsMatchRecurrencesAndBruteForce)
{
    auto large = oracle::large_schroeder(6);
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_schroeder(n);
        auto prime = enumerate_prime_schroeder(n);
        EXPECT_EQ(Integer(prime.size()), large[n - 1]) << n;
        // large = 2 * little for n >= 1
        EXPECT_EQ(Integer(all.size()) * 2, large[n]) << n;
        if (n <= 5) {
            auto brute = brute_schroeder(n);
            EXPECT_EQ(std::set<SchroederCode>(all.begin(), all.end()), std::set<SchroederCode>(brute.begin(), brute.end()));
        }
        for (const auto& c : all) {
            EXPECT_TRUE(is_schroeder_code(c));
            EXPECT_EQ(schroeder_size(c), n);
        }
    }
}

TEST(RightBranchPartition, Examples)
{
    EXPECT_EQ(right_branch_partition(Word{1, 1, 0, 0, 0}), (Partition{1, 1}));
    EXPECT_EQ(right_branch_partition(Word{1, 0, 1, 0, 0}), (Partition{2}));
    EXPECT_EQ(right_branch_partition(Word{2, 0, 0, 0}), (Partition{1}));
    // weights are the internal node counts
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : enumerate_schroeder(n))
            EXPECT_EQ(right_branch_partition(c).weight(), internal_nodes(c));
}

TEST(XYSystem, DisplayedSolution)
{
    auto state = solve_xy_system(3);
    EXPECT_EQ(state.Y[2], parse_word_component<EPoly>("e_1^2S^{11000}+e_1S^{2000}+e_2S^{10100}"));
    EXPECT_EQ(state.X[3].at(Word{1, 1, 0, 1, 0, 0}), EPoly::e(2));
    EXPECT_EQ(state.G[3], parse_word_component<EPoly>(
                              "S^{30000}+e_1S^{210000}+e_1S^{201000}+e_1S^{120000}+e_1^2S^{1110000}+e_2S^{1101000}"));
}

// Y_n = sum over Schroeder trees of size n of e_{lambda(t)} S^t.
TEST(XYSystem, YIsTheTreeSum)
{
    auto state = solve_xy_system(5);
    for (int n = 1; n <= 5; ++n) {
        std::map<Word, EPoly> want;
        for (const auto& c : enumerate_schroeder(n))
            want[c] += EPoly(right_branch_partition(c));
        EXPECT_EQ(state.Y[n], want) << n;
    }
}

TEST(ELagrange, Examples)
{
    ES ge = e_lagrange_series(4);
    EXPECT_EQ(ge[3], ecomponent("S_3+ 2e_1S^{21}+e_1S^{12}+(e_2+e_{11})S^{111}"));
    EXPECT_EQ(ge.coefficient({1, 1, 1, 1}), EPoly::parse("e_{111}+3e_{21}+e_3"));
    ES gam = e_geode(4);
    EXPECT_EQ(gam[2], ecomponent("2e_1S^2+(e_1^2+e_2)S^{11}"));
    EXPECT_EQ(gam.coefficient({1, 1, 1, 1}), EPoly::parse("e_{1}^{4} + 6 e_{1}^{2} e_{2} + 4 e_{1} e_{3} + 2 e_{2}^{2} + e_{4}"));
}

TEST(ELagrange, RoutesAgree)
{
    ES f = e_lagrange_series(6, ERoute::Formula);
    EXPECT_EQ(e_lagrange_series(6, ERoute::Trees), f);
    EXPECT_EQ(e_lagrange_series(6, ERoute::System), f);
}

TEST(ELagrange, Specializations)
{
    ES ge = e_lagrange_series(6);
    EXPECT_EQ(specialize_alternating(ge), free_cumulants(lagrange_series(6)));
    EXPECT_EQ(specialize_first_only(ge), lagrange_series(6));
    auto large = oracle::large_schroeder(6);
    auto ones = specialize_ones(ge);
    for (int n = 1; n <= 6; ++n) {
        Integer sum = 0;
        for (const auto& [c, v] : ones[n])
            sum += v;
        EXPECT_EQ(sum, large[n - 1]) << n;
    }
}

TEST(ELagrange, AlternatingSignOfPrimeTrees)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_prime_schroeder(n))
            EXPECT_EQ(evaluate_alternating(EPoly(prime_weight(t))), Integer(internal_nodes(t) % 2 == 1 ? 1 : -1))
                << word_label(t);
}

TEST(EGeode, IndependentOfK)
{
    ES ge = e_lagrange_series(8);
    auto ref = annihilate(ge, 1).truncated(5);
    for (int k = 2; k <= 3; ++k)
        EXPECT_EQ(annihilate(ge, k).truncated(5), ref) << k;
    EXPECT_EQ(e_geode(5, 2), e_geode(5, 1));
}
