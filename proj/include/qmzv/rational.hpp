#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmzv {

// Exact rational number in canonical form (positive denominator, reduced).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    // Accepts "p" or "p/q" with optional sign; throws ParseError.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    double to_double() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational inverse() const;
    Rational pow(unsigned exponent) const;

    Rational& operator+=(const Rational& other) { value_ += other.value_; return *this; }
    Rational& operator-=(const Rational& other) { value_ -= other.value_; return *this; }
    Rational& operator*=(const Rational& other) { value_ *= other.value_; return *this; }
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Binomial coefficient C(n, k) for small non-negative arguments; 0 when k > n.
Rational binomial(int n, int k);

}  // namespace qmzv
