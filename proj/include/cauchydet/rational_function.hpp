#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace cauchydet {

/// Element of Q(t), kept in canonical form:
///   - gcd(num, den) is constant,
///   - den has coprime integer coefficients and a positive leading coefficient,
///   - zero is 0/1.
/// Two rational functions are equal iff their (num, den) pairs are equal.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw DivisionByZero();
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        rescale();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    Rational eval(const Rational& t0) const {
        Rational d = den_.eval(t0);
        if (d.is_zero())
            throw PoleAtPoint(t0.to_string());
        return num_.eval(t0) / d;
    }

    RationalFunction inverse() const {
        if (is_zero())
            throw DivisionByZero();
        return from_reduced(den_, num_);
    }

    RationalFunction operator-() const { return from_reduced(-num_, den_); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        if (a.is_polynomial() && b.is_polynomial())
            return from_reduced(a.num_ * b.num_, a.den_ * b.den_);
        // Cross-cancel; both operands are already reduced.
        Polynomial g1 = gcd(a.num_, b.den_);
        Polynomial g2 = gcd(b.num_, a.den_);
        Polynomial an = g1.is_constant() ? a.num_ : exact_div(a.num_, g1);
        Polynomial bd = g1.is_constant() ? b.den_ : exact_div(b.den_, g1);
        Polynomial bn = g2.is_constant() ? b.num_ : exact_div(b.num_, g2);
        Polynomial ad = g2.is_constant() ? a.den_ : exact_div(a.den_, g2);
        return from_reduced(an * bn, ad * bd);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_) {
            Polynomial n = a.num_ + b.num_;
            if (a.den_.is_constant())
                return from_reduced(std::move(n), a.den_);
            return RationalFunction(std::move(n), a.den_);
        }
        Polynomial g = gcd(a.den_, b.den_);
        if (g.is_constant())
            return from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Polynomial ad = exact_div(a.den_, g);
        Polynomial bd = exact_div(b.den_, g);
        Polynomial n = a.num_ * bd + b.num_ * ad;
        Polynomial h = gcd(n, g);
        if (h.is_constant())
            return from_reduced(std::move(n), ad * b.den_);
        return from_reduced(exact_div(n, h), ad * bd * exact_div(g, h));
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// "(num)/(den)" with both parts in polynomial serialization.
    std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

    static RationalFunction parse(std::string_view text) {
        auto fail = [&] { return ParseError("malformed rational function: '" + std::string(text) + "'"); };
        const auto split = text.find(")/(");
        if (text.size() < 7 || text.front() != '(' || text.back() != ')' || split == std::string_view::npos)
            throw fail();
        Polynomial n = Polynomial::parse(text.substr(1, split - 1));
        Polynomial d = Polynomial::parse(text.substr(split + 3, text.size() - split - 4));
        if (d.is_zero())
            throw fail();
        return RationalFunction(std::move(n), std::move(d));
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    struct Reduced {};
    RationalFunction(Reduced, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        rescale();
    }

    static RationalFunction from_reduced(Polynomial num, Polynomial den) {
        return RationalFunction(Reduced{}, std::move(num), std::move(den));
    }

    void rescale() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Rational c = den_.primitive_scale();
        if (!c.is_one()) {
            num_ *= c;
            den_ *= c;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace cauchydet
