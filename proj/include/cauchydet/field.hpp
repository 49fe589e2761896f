#pragma once

#include <concepts>
#include <string>

#include "rational.hpp"
#include "rational_function.hpp"

namespace cauchydet {

/// Exact field scalar: Rational (numeric t) or RationalFunction (symbolic t).
template <typename F>
concept ExactField = std::regular<F> && std::constructible_from<F, long> && std::constructible_from<F, Rational> &&
    requires(const F a, const F b) {
        { a + b } -> std::convertible_to<F>;
        { a - b } -> std::convertible_to<F>;
        { a * b } -> std::convertible_to<F>;
        { a / b } -> std::convertible_to<F>;
        { -a } -> std::convertible_to<F>;
        { a.inverse() } -> std::convertible_to<F>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.to_string() } -> std::convertible_to<std::string>;
    };

static_assert(ExactField<Rational>);
static_assert(ExactField<RationalFunction>);

/// x^n for n >= 0 by repeated squaring.
template <ExactField F>
F power(F base, unsigned long n) {
    F acc(1L);
    while (n > 0) {
        if (n & 1UL)
            acc = acc * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return acc;
}

} // namespace cauchydet
