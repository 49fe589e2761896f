#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "rational_function.hpp"

namespace cauchydet {

/// Knobs that deliberately corrupt individual constants of the closed forms.
/// The default-constructed value is the correct formula; anything else exists
/// so the verification suites can be shown to fail.
struct Perturbation {
    long u_power_base = 16;      // U_{j,l}: base^(j-1)
    long e3_power_base = 256;    // chain line 3: base^(j + offset)
    long e3_power_offset = -1;
    bool gamma_left_sign = true; // left Gamma identity: keep the (-1)^j

    /// Line 3 exactly as typeset in the source display, with 32^(j-1). It
    /// disagrees with the other five lines from s = 2 on.
    static Perturbation printed_line3() {
        Perturbation p;
        p.e3_power_base = 32;
        return p;
    }
};

namespace detail {

inline long odd(std::size_t i) { return 2 * static_cast<long>(i) - 1; }
inline long even(std::size_t k) { return 2 * static_cast<long>(k); }

/// prod_{k=1}^{n} (a^2 t^2 - (2k)^2)
template <ExactField F>
F even_shift_product(long a, std::size_t n, const F& t2, std::size_t& zero_at) {
    F acc(1L);
    zero_at = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        F factor = t2 * F(a * a) - F(even(k) * even(k));
        if (factor.is_zero() && zero_at == 0)
            zero_at = k;
        acc = acc * factor;
    }
    return acc;
}

} // namespace detail

/// Closed-form L_{i,j}. Zero above the diagonal through 1/(i-j)! = 0.
template <ExactField F>
F entry_L(std::size_t i, std::size_t j, const F& t) {
    if (i < 1 || j < 1)
        throw DomainError("entry_L indices are 1-based");
    const long si = static_cast<long>(i), sj = static_cast<long>(j);
    const Rational inv_diff = reciprocal_factorial(si - sj);
    if (inv_diff.is_zero())
        return F(0L);
    const F t2 = t * t;
    std::size_t unused = 0, zero_at = 0;
    F num = detail::even_shift_product(detail::odd(j), j, t2, unused);
    F den = detail::even_shift_product(detail::odd(i), j, t2, zero_at);
    if (zero_at != 0)
        throw SingularEntry({{i, j}}, "L denominator factor (2i-1)^2 t^2 - (2k)^2 vanishes at k = " +
                                          std::to_string(zero_at));
    Rational scalar = Rational(factorial(si + sj - 2)) * inv_diff / Rational(factorial(2 * sj - 2));
    return num / den * F(scalar);
}

/// Closed-form U_{j,l}. Zero below the diagonal through 1/(l-j)! = 0.
template <ExactField F>
F entry_U(std::size_t j, std::size_t l, const F& t, const Perturbation& p = {}) {
    if (j < 1 || l < 1)
        throw DomainError("entry_U indices are 1-based");
    const long sj = static_cast<long>(j), sl = static_cast<long>(l);
    const Rational inv_diff = reciprocal_factorial(sl - sj);
    if (inv_diff.is_zero())
        return F(0L);
    const F t2 = t * t;

    F den_left(1L);
    std::size_t zero_left = 0;
    for (std::size_t k = 1; k <= j; ++k) {
        const long a = detail::odd(k), b = detail::even(l);
        F factor = t2 * F(a * a) - F(b * b);
        if (factor.is_zero() && zero_left == 0)
            zero_left = k;
        den_left = den_left * factor;
    }
    std::size_t zero_right = 0;
    F den_right = detail::even_shift_product(detail::odd(j), j - 1, t2, zero_right);
    if (zero_left != 0)
        throw SingularEntry({{j, l}}, "U denominator factor (2k-1)^2 t^2 - (2l)^2 vanishes at k = " +
                                          std::to_string(zero_left));
    if (zero_right != 0)
        throw SingularEntry({{j, l}}, "U denominator factor (2j-1)^2 t^2 - (2k)^2 vanishes at k = " +
                                          std::to_string(zero_right));

    Rational scalar = Rational(p.u_power_base).pow(sj - 1) * Rational(factorial(2 * sj - 2)) *
                      Rational(factorial(sj + sl - 1)) * inv_diff / Rational(sl);
    if (sj % 2 == 1)
        scalar = -scalar;
    F numerator = power(t2, static_cast<unsigned long>(sj - 1)) * F(scalar);
    return numerator / (den_left * den_right);
}

namespace detail {

template <ExactField F, typename Entry>
Matrix<F> assemble(std::size_t s, Entry&& entry) {
    if (s < 1)
        throw DomainError("matrix size must be at least 1");
    Matrix<F> m(s, s);
    std::vector<SingularEntry::Index> bad;
    std::string first_detail;
    for (std::size_t r = 1; r <= s; ++r)
        for (std::size_t c = 1; c <= s; ++c) {
            try {
                m.at(r, c) = entry(r, c);
            } catch (const SingularEntry& e) {
                bad.emplace_back(r, c);
                if (first_detail.empty())
                    first_detail = e.detail();
            }
        }
    if (!bad.empty())
        throw SingularEntry(std::move(bad), first_detail);
    return m;
}

} // namespace detail

template <ExactField F>
Matrix<F> build_L(std::size_t s, const F& t) {
    return detail::assemble<F>(s, [&](std::size_t i, std::size_t j) { return entry_L(i, j, t); });
}

template <ExactField F>
Matrix<F> build_U(std::size_t s, const F& t, const Perturbation& p = {}) {
    return detail::assemble<F>(s, [&](std::size_t j, std::size_t l) { return entry_U(j, l, t, p); });
}

/// D_s as the product of the closed-form diagonal of U; D_0 = 1.
template <ExactField F>
F det_closed(std::size_t s, const F& t, const Perturbation& p = {}) {
    F acc(1L);
    for (std::size_t j = 1; j <= s; ++j)
        acc = acc * entry_U(j, j, t, p);
    return acc;
}

struct IdentitySides {
    RationalFunction lhs;
    RationalFunction rhs;
};

/// prod_{k=1}^{j} ((2i-1)^2 t^2 - (2k)^2)  vs  (-1)^j 4^j (1 - t(i-1/2))_j (1 + t(i-1/2))_j
inline IdentitySides gamma_identity_left(std::size_t i, std::size_t j, const Perturbation& p = {}) {
    if (i < 1 || j < 1)
        throw DomainError("gamma_identity_left indices are 1-based");
    const RationalFunction t = RationalFunction::variable();
    std::size_t unused = 0;
    RationalFunction lhs = detail::even_shift_product(detail::odd(i), j, t * t, unused);

    const RationalFunction shift = t * RationalFunction(Rational(detail::odd(i), 2));
    const long sj = static_cast<long>(j);
    Rational scale = Rational(4).pow(sj);
    if (p.gamma_left_sign && sj % 2 == 1)
        scale = -scale;
    RationalFunction rhs = RationalFunction(scale) * rising_factorial(RationalFunction(1L) - shift, sj) *
                           rising_factorial(RationalFunction(1L) + shift, sj);
    return {std::move(lhs), std::move(rhs)};
}

/// prod_{k=1}^{j} ((2k-1)^2 t^2 - (2l)^2)  vs  4^j t^{2j} (1/2 + l/t)_j (1/2 - l/t)_j
inline IdentitySides gamma_identity_right(std::size_t j, std::size_t l) {
    if (j < 1 || l < 1)
        throw DomainError("gamma_identity_right indices are 1-based");
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction t2 = t * t;
    RationalFunction lhs(1L);
    for (std::size_t k = 1; k <= j; ++k) {
        const long a = detail::odd(k), b = detail::even(l);
        lhs = lhs * (t2 * RationalFunction(a * a) - RationalFunction(b * b));
    }

    const long sj = static_cast<long>(j);
    const RationalFunction l_over_t = RationalFunction(static_cast<long>(l)) / t;
    const RationalFunction half(Rational(1, 2));
    RationalFunction rhs = RationalFunction(Rational(4).pow(sj)) * power(t2, static_cast<unsigned long>(sj)) *
                           rising_factorial(half + l_over_t, sj) * rising_factorial(half - l_over_t, sj);
    return {std::move(lhs), std::move(rhs)};
}

/// The six t = 1 expressions for D_s, in display order. Each is computed from
/// its own formula; nothing is shared between them beyond primitives.
struct ChainValues {
    std::size_t s = 0;
    std::array<Rational, 6> values;

    bool all_equal() const {
        for (const auto& v : values)
            if (v != values[0])
                return false;
        return true;
    }
};

namespace detail {

inline BigInt ipow(long base, long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return r;
}

// (1/s!) prod_j (-1)^j 16^{j-1} (2j-2)! (2j-1)!
//   / [prod_{k=1}^{j} (2k-2j-1)(2k+2j-1) * prod_{k=1}^{j-1} (2j-2k-1)(2j+2k-1)]
inline Rational chain_line1(long s) {
    Rational acc(BigInt(1), factorial(s));
    for (long j = 1; j <= s; ++j) {
        BigInt num = ipow(16, j - 1) * factorial(2 * j - 2) * factorial(2 * j - 1);
        if (j % 2 == 1)
            num = -num;
        BigInt den = 1;
        for (long k = 1; k <= j; ++k)
            den *= BigInt(2 * k - 2 * j - 1) * BigInt(2 * k + 2 * j - 1);
        for (long k = 1; k <= j - 1; ++k)
            den *= BigInt(2 * j - 2 * k - 1) * BigInt(2 * j + 2 * k - 1);
        acc *= Rational(num, den);
    }
    return acc;
}

// (1/s!) prod_j 16^{j-1} (2j-1)!^2 / [(4j-1)!! (4j-3)!!]
inline Rational chain_line2(long s) {
    Rational acc(BigInt(1), factorial(s));
    for (long j = 1; j <= s; ++j) {
        BigInt f = factorial(2 * j - 1);
        acc *= Rational(ipow(16, j - 1) * f * f, double_factorial(4 * j - 1) * double_factorial(4 * j - 3));
    }
    return acc;
}

// (4^s/s!) prod_j 256^{j-1} (2j-1)!^4 / [(4j-1)! (4j-2)!]
// The source display prints 32^{j-1}; rewriting line 2 with
// (4j-1)!! = (4j)!/(2^{2j}(2j)!) and (4j-3)!! = (4j-2)!/(2^{2j-1}(2j-1)!) gives
// 4 * 256^{j-1} per factor, and only that agrees with lines 1, 2, 4, 5, 6.
inline Rational chain_line3(long s, long power_base, long power_offset) {
    Rational acc(ipow(4, s), factorial(s));
    for (long j = 1; j <= s; ++j) {
        BigInt f = factorial(2 * j - 1);
        Rational scale = Rational(power_base).pow(j + power_offset);
        acc *= scale * Rational(f * f * f * f, factorial(4 * j - 1) * factorial(4 * j - 2));
    }
    return acc;
}

// 4^s 16^{s(s-1)} / s!^2 / prod_j binom(4j,2j) binom(4j-2,2j-1)
inline Rational chain_line4(long s) {
    BigInt den = factorial(s) * factorial(s);
    for (long j = 1; j <= s; ++j)
        den *= binomial(4 * j, 2 * j) * binomial(4 * j - 2, 2 * j - 1);
    return Rational(ipow(4, s) * ipow(16, s * (s - 1)), den);
}

// 4^s 16^{s(s-1)} / s!^2 / prod_{j=1}^{2s} binom(2j,j)
inline Rational chain_line5(long s) {
    BigInt den = factorial(s) * factorial(s);
    for (long j = 1; j <= 2 * s; ++j)
        den *= binomial(2 * j, j);
    return Rational(ipow(4, s) * ipow(16, s * (s - 1)), den);
}

// 16^{s(s-1)} / s!^2 / prod_{j=0}^{2s-1} binom(2j+1,j)
inline Rational chain_line6(long s) {
    BigInt den = factorial(s) * factorial(s);
    for (long j = 0; j <= 2 * s - 1; ++j)
        den *= binomial(2 * j + 1, j);
    return Rational(ipow(16, s * (s - 1)), den);
}

} // namespace detail

inline ChainValues chain_t1(std::size_t s, const Perturbation& p = {}) {
    if (s < 1)
        throw DomainError("chain_t1 needs s >= 1");
    const long n = static_cast<long>(s);
    return {s,
            {detail::chain_line1(n), detail::chain_line2(n), detail::chain_line3(n, p.e3_power_base, p.e3_power_offset),
             detail::chain_line4(n), detail::chain_line5(n), detail::chain_line6(n)}};
}

/// D_s at t = 1 via the last (binomial) expression.
inline Rational det_t1(std::size_t s) {
    if (s < 1)
        throw DomainError("det_t1 needs s >= 1");
    return detail::chain_line6(static_cast<long>(s));
}

} // namespace cauchydet
