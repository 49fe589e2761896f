#pragma once

// Test-only reference computations and generators. Nothing here calls the
// library's determinant or LU code.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <cauchydet/matrix.hpp>
#include <cauchydet/rational.hpp>

namespace cauchydet::oracle {

/// Leibniz formula: sum over all permutations with explicit sign.
inline Rational leibniz_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    Rational total;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Rational term(1);
        for (std::size_t i = 0; i < n; ++i)
            term *= m.at(i + 1, perm[i]);
        total += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Direct substitution into 1/((2l)^2 - t^2 (2i-1)^2).
inline Rational cauchy_entry(long i, long l, const Rational& t) {
    return Rational(1) / (Rational(4 * l * l) - t * t * Rational((2 * i - 1) * (2 * i - 1)));
}

class RationalGen {
public:
    explicit RationalGen(unsigned seed) : rng_(seed) {}

    Rational operator()(long height = 30) {
        std::uniform_int_distribution<long> num(-height, height);
        std::uniform_int_distribution<long> den(1, height);
        return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
    }

    Rational nonzero(long height = 30) {
        Rational r;
        do
            r = (*this)(height);
        while (r.is_zero());
        return r;
    }

    Matrix<Rational> matrix(std::size_t n, long height = 9) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t l = 1; l <= n; ++l)
                m.at(i, l) = (*this)(height);
        return m;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace cauchydet::oracle
