#include "qmzv/rational.hpp"

#include <cctype>
#include <ostream>

#include "qmzv/error.hpp"

namespace qmzv {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
    if (denominator == 0) {
        throw Error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t end = start;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        if (end == start) {
            throw ParseError("expected digits in rational '" + std::string(text) + "'", start);
        }
        return end;
    };
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        ++pos;
    }
    const std::size_t num_end = digits(pos);
    std::string num(text.substr(0, num_end));
    if (num.front() == '+') {
        num.erase(0, 1);
    }
    if (num_end == text.size()) {
        return Rational(mpq_class(mpz_class(num)));
    }
    if (text[num_end] != '/') {
        throw ParseError("unexpected character in rational '" + std::string(text) + "'", num_end);
    }
    const std::size_t den_end = digits(num_end + 1);
    if (den_end != text.size()) {
        throw ParseError("trailing characters in rational '" + std::string(text) + "'", den_end);
    }
    mpz_class den(std::string(text.substr(num_end + 1)));
    if (den == 0) {
        throw ParseError("zero denominator in rational '" + std::string(text) + "'", num_end + 1);
    }
    return Rational(mpq_class(mpz_class(num), den));
}

std::string Rational::to_string() const { return value_.get_str(); }

double Rational::to_double() const { return value_.get_d(); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw Error("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) {
        throw Error("division by zero");
    }
    value_ /= other.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(out));
}

}  // namespace qmzv
