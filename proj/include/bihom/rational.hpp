#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bihom {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// A thin value wrapper around GMP's mpq_class. gmpxx canonicalizes the
/// results of its arithmetic operators; the only entry point that can produce
/// a non-canonical value is the (num, den) constructor, which canonicalizes
/// explicitly.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}

    Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q" or "-p/q" (surrounding blanks allowed).
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            return s;
        };
        auto parse_int = [](std::string_view s, bool allow_sign) {
            std::string digits(s);
            std::size_t start = 0;
            if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+'))
                start = 1;
            if (start == digits.size())
                throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
            for (std::size_t i = start; i < digits.size(); ++i)
                if (digits[i] < '0' || digits[i] > '9')
                    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
            if (digits[0] == '+')
                digits.erase(0, 1);
            return mpz_class(digits, 10);
        };
        text = trim(text);
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text, true), mpz_class(1));
        auto num = parse_int(trim(text.substr(0, slash)), true);
        auto den = parse_int(trim(text.substr(slash + 1)), false);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const {
        if (is_integer())
            return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace bihom
