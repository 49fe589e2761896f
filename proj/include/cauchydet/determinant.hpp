#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace cauchydet {

inline constexpr std::size_t kDefaultCofactorCap = 7;

namespace detail {

template <ExactField F>
F cofactor_expand(const Matrix<F>& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.size() == 1)
        return m.at(row, cols.front());
    F acc(0L);
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const F& entry = m.at(row, cols[idx]);
        if (entry.is_zero())
            continue;
        std::size_t col = cols[idx];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
        F minor = cofactor_expand(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), col);
        F term = entry * minor;
        acc = idx % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

} // namespace detail

/// Laplace expansion along successive rows. Refuses sizes above `cap`.
template <ExactField F>
F det_cofactor(const Matrix<F>& m, std::size_t cap = kDefaultCofactorCap) {
    if (!m.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() > cap)
        throw SizeCapExceeded(m.rows(), cap);
    if (m.rows() == 0)
        return F(1L);
    std::vector<std::size_t> cols(m.rows());
    for (std::size_t l = 0; l < cols.size(); ++l)
        cols[l] = l + 1;
    return detail::cofactor_expand(m, cols, 1);
}

/// Bareiss fraction-free elimination with row swaps over the field itself.
template <ExactField F>
F det_elimination(Matrix<F> a) {
    if (!a.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return F(1L);
    F prev(1L);
    bool negate = false;
    for (std::size_t k = 1; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p <= n && a.at(p, k).is_zero())
                ++p;
            if (p > n)
                return F(0L);
            for (std::size_t l = 1; l <= n; ++l)
                std::swap(a.at(k, l), a.at(p, l));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t l = k + 1; l <= n; ++l)
                a.at(i, l) = (a.at(i, l) * a.at(k, k) - a.at(i, k) * a.at(k, l)) / prev;
            a.at(i, k) = F(0L);
        }
        prev = a.at(k, k);
    }
    return negate ? -a.at(n, n) : a.at(n, n);
}

/// Rational specialization: clear each row's denominators, run integer
/// Bareiss on mpz entries, divide the row scales back out.
inline Rational det_elimination(const Matrix<Rational>& m) {
    if (!m.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t l = 0; l < n; ++l)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i + 1, l + 1).den().get_mpz_t());
        for (std::size_t l = 0; l < n; ++l) {
            const Rational& x = m.at(i + 1, l + 1);
            a[i][l] = x.num() * (row_lcm / x.den());
        }
        scale *= row_lcm;
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t l = k + 1; l < n; ++l) {
                BigInt v = a[i][l] * a[k][k] - a[i][k] * a[k][l];
                mpz_divexact(a[i][l].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1], scale);
}

} // namespace cauchydet
