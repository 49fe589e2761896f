#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace cauchydet {

using BigInt = mpz_class;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw DivisionByZero();
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Accepts "p" or "p/q" with an optional leading '-'. Nothing else
    /// (no decimals, no exponents, no whitespace).
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && body.front() == '-') {
            negative = true;
            body.remove_prefix(1);
        }
        auto slash = body.find('/');
        std::string_view p = body.substr(0, slash);
        std::string_view q = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (!digits(p) || !digits(q))
            throw ParseError("not an exact fraction: '" + std::string(text) + "'");
        BigInt num{std::string(p)};
        BigInt den{std::string(q)};
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        if (negative)
            num = -num;
        return Rational(num, den);
    }

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZero();
        Rational r;
        mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
        return r;
    }

    /// Integer power; negative exponents invert.
    Rational pow(long exponent) const {
        if (exponent < 0)
            return inverse().pow(-exponent);
        BigInt n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
        return Rational(n, d);
    }

    std::string to_string() const {
        if (is_integer())
            return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

} // namespace cauchydet
