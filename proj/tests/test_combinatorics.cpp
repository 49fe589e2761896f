#include <gtest/gtest.h>

#include <cauchydet/combinatorics.hpp>

using namespace cauchydet;

namespace {

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }

TEST(Combinatorics, Factorial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Combinatorics, ReciprocalFactorial) {
    EXPECT_EQ(reciprocal_factorial(-1), Rational(0));
    EXPECT_EQ(reciprocal_factorial(-7), Rational(0));
    EXPECT_EQ(reciprocal_factorial(0), Rational(1));
    EXPECT_EQ(reciprocal_factorial(3), q(1, 6));
    for (long n = 0; n <= 25; ++n)
        EXPECT_EQ(reciprocal_factorial(n) * Rational(factorial(n)), Rational(1));
}

TEST(Combinatorics, DoubleFactorial) {
    EXPECT_EQ(double_factorial(5), 15);
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(7), 1 * 3 * 5 * 7);
    EXPECT_THROW(double_factorial(4), DomainError);
    EXPECT_THROW(double_factorial(-3), DomainError);
}

TEST(Combinatorics, DoubleFactorialLinksToFactorial) {
    // (2n-1)!! * 2^n n! = (2n)!
    for (long n = 1; n <= 20; ++n) {
        BigInt pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
        EXPECT_EQ(double_factorial(2 * n - 1) * pow2 * factorial(n), factorial(2 * n)) << n;
    }
}

TEST(Combinatorics, Binomial) {
    EXPECT_EQ(binomial(3, 1), 3);
    EXPECT_EQ(binomial(11, 5), 462);
    EXPECT_EQ(binomial(4, 7), 0);
    EXPECT_EQ(binomial(4, -1), 0);
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k)
            EXPECT_EQ(binomial(n, k) * factorial(k) * factorial(n - k), factorial(n));
}

TEST(Combinatorics, RisingFactorial) {
    EXPECT_EQ(rising_factorial(q(7, 3), 0), Rational(1));
    EXPECT_EQ(rising_factorial(q(1, 2), 3), q(15, 8));
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction a = RationalFunction(1L) - t / RationalFunction(2L);
    EXPECT_EQ(rising_factorial(a, 1), a);
    EXPECT_THROW(rising_factorial(q(1, 2), -1), DomainError);
    // (1)_n = n!
    for (long n = 0; n <= 12; ++n)
        EXPECT_EQ(rising_factorial(Rational(1), n), Rational(factorial(n)));
}

TEST(CombinatoricsProperty, RisingFactorialSplits) {
    const RationalFunction t = RationalFunction::variable();
    const std::vector<Rational> rational_bases = {q(1, 2), q(-7, 3), Rational(0), Rational(5), q(-1, 9)};
    for (long m = 0; m <= 10; ++m)
        for (long n = 0; n + m <= 10; ++n) {
            for (const auto& a : rational_bases)
                EXPECT_EQ(rising_factorial(a, m + n), rising_factorial(a, m) * rising_factorial(a + Rational(m), n));
            const RationalFunction a = RationalFunction(q(1, 2)) - t * RationalFunction(3L);
            EXPECT_EQ(rising_factorial(a, m + n),
                      rising_factorial(a, m) * rising_factorial(a + RationalFunction(m), n));
        }
}

} // namespace
