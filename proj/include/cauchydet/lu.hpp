#pragma once

#include "errors.hpp"
#include "matrix.hpp"

namespace cauchydet {

template <ExactField F>
struct LUFactors {
    Matrix<F> L; // unit lower triangular
    Matrix<F> U; // upper triangular
};

/// Doolittle LU without pivoting: m = L U with unit-diagonal L.
/// Throws ZeroPivot(k) when the k-th leading principal minor vanishes.
template <ExactField F>
LUFactors<F> lu_doolittle(const Matrix<F>& m) {
    if (!m.is_square())
        throw DimensionMismatch("lu_doolittle needs a square matrix");
    const std::size_t n = m.rows();
    Matrix<F> L = Matrix<F>::identity(n);
    Matrix<F> U(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k; l <= n; ++l) {
            F acc = m.at(k, l);
            for (std::size_t p = 1; p < k; ++p)
                if (!L.at(k, p).is_zero() && !U.at(p, l).is_zero())
                    acc = acc - L.at(k, p) * U.at(p, l);
            U.at(k, l) = std::move(acc);
        }
        if (U.at(k, k).is_zero())
            throw ZeroPivot(k);
        const F pivot_inv = U.at(k, k).inverse();
        for (std::size_t i = k + 1; i <= n; ++i) {
            F acc = m.at(i, k);
            for (std::size_t p = 1; p < k; ++p)
                if (!L.at(i, p).is_zero() && !U.at(p, k).is_zero())
                    acc = acc - L.at(i, p) * U.at(p, k);
            L.at(i, k) = acc * pivot_inv;
        }
    }
    return {std::move(L), std::move(U)};
}

} // namespace cauchydet
