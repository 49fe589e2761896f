#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "rational.hpp"

namespace cauchydet {

inline BigInt factorial(long n) {
    if (n < 0)
        throw DomainError("factorial of negative integer " + std::to_string(n));
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// 1/n!, extended by the Gamma-pole convention: 0 for negative n.
inline Rational reciprocal_factorial(long n) {
    if (n < 0)
        return Rational(0);
    return Rational(BigInt(1), factorial(n));
}

/// n!! for odd n >= -1, with (-1)!! = 1.
inline BigInt double_factorial(long n) {
    if (n < -1 || n % 2 == 0)
        throw DomainError("double factorial is defined here for odd n >= -1, got " + std::to_string(n));
    if (n == -1)
        return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// n choose k; 0 when k is outside [0, n].
inline BigInt binomial(long n, long k) {
    if (n < 0)
        throw DomainError("binomial with negative n " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1) = Gamma(a+n)/Gamma(a).
template <ExactField F>
F rising_factorial(const F& a, long n) {
    if (n < 0)
        throw DomainError("rising factorial with negative length " + std::to_string(n));
    F acc(1L);
    for (long m = 0; m < n; ++m)
        acc = acc * (a + F(m));
    return acc;
}

} // namespace cauchydet
