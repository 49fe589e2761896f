#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cauchydet {

/// Dense univariate polynomial in t over the rationals.
///
/// coefficient(k) is the coefficient of t^k. The stored coefficient vector is
/// always trimmed so that its last entry is nonzero; the zero polynomial is the
/// empty vector and has no degree (degree() == std::nullopt, standing in for
/// minus infinity).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c) {
        if (!c.is_zero())
            coeffs_.push_back(c);
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The indeterminate t.
    static Polynomial variable() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

    /// c * t^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.size() - 1;
    }

    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial monic() const {
        if (is_zero())
            return *this;
        return *this * leading().inverse();
    }

    /// Rational c such that c * (*this) has coprime integer coefficients and a
    /// positive leading coefficient. Returns 1 for the zero polynomial.
    Rational primitive_scale() const {
        if (is_zero())
            return Rational(1);
        BigInt lcm_den = 1;
        for (const auto& c : coeffs_)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            BigInt scaled = c.num() * (lcm_den / c.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
        }
        Rational scale(lcm_den, g);
        return leading().sign() < 0 ? -scale : scale;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_)
            x *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Sparse descending form, e.g. "9*t^2 - 4", "-1/2*t + 3", "0".
    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
            const Rational& c = coeffs_[idx];
            if (c.is_zero())
                continue;
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            Rational a = c.sign() < 0 ? -c : c;
            if (idx == 0) {
                out += a.to_string();
                continue;
            }
            if (!a.is_one())
                out += a.to_string() + "*";
            out += "t";
            if (idx > 1)
                out += "^" + std::to_string(idx);
        }
        return out;
    }

    /// Inverse of to_string(); whitespace is ignored.
    static Polynomial parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ')
                s += c;
        if (s.empty())
            throw ParseError("empty polynomial");
        Polynomial result;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t end = pos + 1;
            while (end < s.size() && s[end] != '+' && s[end] != '-')
                ++end;
            result += parse_term(std::string_view(s).substr(pos, end - pos), text);
            pos = end;
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    static Polynomial parse_term(std::string_view term, std::string_view whole) {
        auto fail = [&] { return ParseError("malformed polynomial: '" + std::string(whole) + "'"); };
        bool negative = false;
        if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
            negative = term.front() == '-';
            term.remove_prefix(1);
        }
        if (term.empty())
            throw fail();
        Rational coeff(1);
        std::size_t power = 0;
        auto tpos = term.find('t');
        if (tpos == std::string_view::npos) {
            coeff = Rational::parse(term);
        } else {
            std::string_view before = term.substr(0, tpos);
            std::string_view after = term.substr(tpos + 1);
            if (!before.empty()) {
                if (before.back() != '*')
                    throw fail();
                coeff = Rational::parse(before.substr(0, before.size() - 1));
            }
            power = 1;
            if (!after.empty()) {
                if (after.front() != '^' || after.size() < 2)
                    throw fail();
                Rational p = Rational::parse(after.substr(1));
                if (!p.is_integer() || p.sign() < 0)
                    throw fail();
                power = p.num().get_ui();
            }
        }
        return monomial(negative ? -coeff : coeff, power);
    }

    std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw DivisionByZero();
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (rem.size() <= db)
        return {Polynomial(), a};
    std::vector<Rational> quot(rem.size() - db);
    const Rational inv_lead = bc.back().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero())
            continue;
        Rational factor = rem[k] * inv_lead;
        quot[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= factor * bc[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm over Q (remainders kept monic).
/// gcd(0, 0) is 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

/// Exact quotient; the caller guarantees b divides a.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return divrem(a, b).first; }

} // namespace cauchydet
