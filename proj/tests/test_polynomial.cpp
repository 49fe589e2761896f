#include <gtest/gtest.h>

#include <cauchydet/polynomial.hpp>

#include "oracles.hpp"

using cauchydet::BigInt;
using cauchydet::Polynomial;
using cauchydet::Rational;

namespace {

const Polynomial t = Polynomial::variable();

Polynomial gen_poly(cauchydet::oracle::RationalGen& gen, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rational> c(deg(gen.engine()) + 1);
    for (auto& x : c)
        x = gen(12);
    return Polynomial(std::move(c));
}

TEST(Polynomial, ZeroHasNoDegree) {
    EXPECT_FALSE(Polynomial().degree().has_value());
    EXPECT_FALSE(Polynomial(std::vector<Rational>{0, 0, 0}).degree().has_value());
    EXPECT_EQ(Polynomial(std::vector<Rational>{0, 0, 0}), Polynomial());
    EXPECT_EQ(*Polynomial(5).degree(), 0u);
    EXPECT_EQ(*(t * t - Polynomial(4)).degree(), 2u);
}

TEST(Polynomial, Multiply) {
    EXPECT_EQ((t * t - Polynomial(4)) * (t * t + Polynomial(4)), t * t * t * t - Polynomial(16));
    EXPECT_TRUE((t * Polynomial()).is_zero());
}

TEST(Polynomial, DivRem) {
    auto [quot, rem] = divrem(t * t * t, t * t - Polynomial(1));
    EXPECT_EQ(quot, t);
    EXPECT_EQ(rem, t);
    EXPECT_THROW(divrem(t, Polynomial()), cauchydet::DivisionByZero);
    auto [q0, r0] = divrem(t, t * t);
    EXPECT_TRUE(q0.is_zero());
    EXPECT_EQ(r0, t);
}

TEST(Polynomial, Gcd) {
    EXPECT_EQ(gcd(t * t - Polynomial(4), Polynomial(9) * t * t - Polynomial(4)), Polynomial(1));
    // gcd((t-2)(t+3), 5(t-2)(t-1)) = t - 2, monic
    Polynomial a = (t - Polynomial(2)) * (t + Polynomial(3));
    Polynomial b = Polynomial(5) * (t - Polynomial(2)) * (t - Polynomial(1));
    EXPECT_EQ(gcd(a, b), t - Polynomial(2));
    EXPECT_EQ(gcd(Polynomial(), Polynomial(3) * t), t);
}

TEST(Polynomial, Serialization) {
    EXPECT_EQ((Polynomial(9) * t * t - Polynomial(4)).to_string(), "9*t^2 - 4");
    EXPECT_EQ((-t * t + Polynomial(4)).to_string(), "-t^2 + 4");
    EXPECT_EQ((Polynomial(Rational(BigInt(-1), BigInt(2))) * t + Polynomial(3)).to_string(), "-1/2*t + 3");
    EXPECT_EQ(Polynomial().to_string(), "0");
    EXPECT_EQ(Polynomial::parse("9*t^2 - 4"), Polynomial(9) * t * t - Polynomial(4));
    EXPECT_EQ(Polynomial::parse("-t"), -t);
    EXPECT_THROW(Polynomial::parse("3t"), cauchydet::ParseError);
    EXPECT_THROW(Polynomial::parse("t^x"), cauchydet::ParseError);
}

TEST(PolynomialProperty, DivisionIdentityAndRoundTrip) {
    cauchydet::oracle::RationalGen gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = gen_poly(gen, 8);
        Polynomial b = gen_poly(gen, 5);
        EXPECT_EQ(Polynomial::parse(a.to_string()), a);
        if (b.is_zero())
            continue;
        auto [quot, rem] = divrem(a, b);
        EXPECT_EQ(quot * b + rem, a);
        EXPECT_TRUE(rem.is_zero() || *rem.degree() < *b.degree());
    }
}

TEST(PolynomialProperty, GcdDividesBoth) {
    cauchydet::oracle::RationalGen gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial common = gen_poly(gen, 2);
        if (common.is_zero())
            continue;
        Polynomial a = common * gen_poly(gen, 3);
        Polynomial b = common * gen_poly(gen, 3);
        if (a.is_zero() || b.is_zero())
            continue;
        Polynomial g = gcd(a, b);
        EXPECT_TRUE(divrem(a, g).second.is_zero());
        EXPECT_TRUE(divrem(b, g).second.is_zero());
        EXPECT_TRUE(divrem(g, common.monic()).second.is_zero());
        EXPECT_TRUE(g.leading().is_one());
    }
}

} // namespace
