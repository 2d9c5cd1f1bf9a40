#include <random>

#include <gtest/gtest.h>

#include <ncgeode/coeffring.hpp>

#include "support.hpp"

using namespace ncgeode;

TEST(Rational, FieldArithmetic)
{
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(parse_rational("-7/14"), Rational(-1, 2));
    EXPECT_EQ(to_string(Rational(6, 3)), "2");
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
    EXPECT_THROW(parse_integer("3/2"), parse_error);
    EXPECT_THROW(parse_rational("1/0x"), parse_error);
    EXPECT_THROW(exact_divide(Integer(7), Integer(2)), not_divisible);
    EXPECT_EQ(exact_divide(Integer(-12), Integer(4)), Integer(-3));
}

TEST(PolyT, UnitLawAndPrinting)
{
    PolyT p = PolyT::parse("2t^2-t");
    EXPECT_EQ(p * PolyT(1), p);
    EXPECT_EQ(p.to_string(), "2t^2-t");
    EXPECT_EQ(PolyT::parse("(3t^2-t)/2"), PolyT(std::vector<Rational>{0, Rational(-1, 2), Rational(3, 2)}));
    EXPECT_EQ(PolyT::parse("(3t^2-t)/2").to_string(), "(3t^2-t)/2");
    EXPECT_EQ(PolyT::parse("(8t^3-6t^2+t)/3").evaluate(1), Rational(1));
    EXPECT_EQ(PolyT::t().shifted(-1), PolyT::parse("t-1"));
    EXPECT_TRUE(PolyT(0).is_zero());
}

TEST(PolyT, ParseRoundTripRandom)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6), deg(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c)
            x = Rational(num(rng), den(rng));
        PolyT p(c);
        EXPECT_EQ(PolyT::parse(p.to_string()), p) << p.to_string();
    }
}

TEST(PolyT, RingAxiomsRandom)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-5, 5), deg(0, 3);
    auto random_poly = [&] {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& x : c)
            x = Rational(num(rng), 2);
        return PolyT(c);
    };
    for (int trial = 0; trial < 100; ++trial) {
        PolyT a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b).evaluate(3), a.evaluate(3) * b.evaluate(3));
        if (!b.is_zero())
            EXPECT_EQ(exact_divide(a * b, b), a);
    }
}

TEST(EPoly, MonomialsMultiplyByPartitionUnion)
{
    EPoly e1 = EPoly::e(1);
    EXPECT_EQ(e1 * e1, EPoly(Partition{1, 1}));
    EXPECT_EQ((e1 * e1).coefficient(Partition{1, 1}), Integer(1));
    EXPECT_EQ(EPoly::e(2) * EPoly::e(1), EPoly(Partition{2, 1}));
    EXPECT_EQ(EPoly::parse("e_{111}+3e_{21}+e_3"), e1 * e1 * e1 + EPoly(3) * EPoly::e(2) * e1 + EPoly::e(3));
    EXPECT_EQ(EPoly::parse("e_{1}^{4} + 6 e_{1}^{2} e_{2}"), EPoly(Partition{1, 1, 1, 1}) + EPoly(Partition{2, 1, 1}, 6));
    EXPECT_EQ(EPoly::parse((e1 * e1 + EPoly::e(2)).to_string()), e1 * e1 + EPoly::e(2));
}

TEST(BinomialPolynomial, Examples)
{
    EXPECT_EQ(binomial_polynomial(2, 2), PolyT::parse("2t^2-t"));
    EXPECT_EQ(binomial_polynomial(1, 0), PolyT(1));
    EXPECT_EQ(binomial_polynomial(2, 1), PolyT::parse("2t"));
}

TEST(BinomialPolynomial, MatchesIntegerBinomials)
{
    for (int m = 0; m <= 5; ++m)
        for (int a = 0; a <= 6; ++a) {
            PolyT p = binomial_polynomial(m, a);
            for (int k = 0; k <= 6; ++k)
                EXPECT_EQ(p.evaluate(k), Rational(oracle::binom(m * k, a))) << "m=" << m << " a=" << a << " k=" << k;
        }
}

TEST(ElementaryOfMultiple, Examples)
{
    EXPECT_EQ(elementary_of_multiple(1, 2), EPoly(Partition{1}, 2));
    EXPECT_EQ(elementary_of_multiple(2, 1), EPoly::e(2));
    EXPECT_EQ(elementary_of_multiple(2, 2), EPoly(Partition{2}, 2) + EPoly(Partition{1, 1}));
    EXPECT_EQ(elementary_of_multiple(0, 3), EPoly(1));
}

// e_k((j1 + j2)A) = sum_{k1 + k2 = k} e_{k1}(j1 A) e_{k2}(j2 A)
TEST(ElementaryOfMultiple, AlphabetAdditivity)
{
    for (int k = 0; k <= 6; ++k)
        for (int j1 = 0; j1 <= 4; ++j1)
            for (int j2 = 0; j2 <= 4; ++j2) {
                EPoly sum;
                for (int k1 = 0; k1 <= k; ++k1)
                    sum += elementary_of_multiple(k1, j1) * elementary_of_multiple(k - k1, j2);
                EXPECT_EQ(elementary_of_multiple(k, j1 + j2), sum) << "k=" << k << " j=" << j1 << "+" << j2;
            }
}

// e_k(jA) at e_n = 1 counts weak compositions of k into j parts.
TEST(ElementaryOfMultiple, CountsWeakCompositions)
{
    for (int k = 0; k <= 6; ++k)
        for (int j = 1; j <= 4; ++j)
            EXPECT_EQ(evaluate_at_one(elementary_of_multiple(k, j)), oracle::binom(k + j - 1, j - 1));
}

TEST(EPolyEvaluate, NamedSubstitutions)
{
    EPoly p = EPoly::e(2) + EPoly(Partition{1, 1});
    EXPECT_EQ(evaluate_alternating(p), Integer(2));
    EXPECT_EQ(evaluate_at_one(p), Integer(2));
    EXPECT_EQ(evaluate_powers(EPoly(Partition{1, 1})), PolyT(std::vector<Rational>{0, 0, 1}));
}

TEST(EPolyEvaluate, IsRingHomomorphism)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> part(1, 3), len(0, 3), coeff(-3, 3), terms(1, 3);
    auto random_epoly = [&] {
        EPoly p;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            std::vector<int> parts(len(rng));
            for (auto& x : parts)
                x = part(rng);
            std::sort(parts.rbegin(), parts.rend());
            p.add_term(Partition(parts), coeff(rng));
        }
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        EPoly a = random_epoly(), b = random_epoly();
        EXPECT_EQ(evaluate_alternating(a * b), evaluate_alternating(a) * evaluate_alternating(b));
        EXPECT_EQ(evaluate_at_one(a * b), evaluate_at_one(a) * evaluate_at_one(b));
        EXPECT_EQ(evaluate_powers(a * b), evaluate_powers(a) * evaluate_powers(b));
        EXPECT_EQ(evaluate_at_one(a + b), evaluate_at_one(a) + evaluate_at_one(b));
    }
}
