#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

// Polynomial in the formal variable h (hbar) with rational coefficients.
//
// Dense storage indexed by h-degree; trailing zeros are stripped so the zero
// polynomial has no coefficients. Degrees stay below the weight (<= 8 in
// practice), so dense vectors are the cheapest representation.
class HPoly {
public:
    HPoly() = default;
    HPoly(Rational constant);  // NOLINT(google-explicit-constructor)
    HPoly(long constant) : HPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit HPoly(std::vector<Rational> coefficients);

    // c * h^power
    static HPoly monomial(Rational c, int power);
    static HPoly hbar(int power = 1) { return monomial(Rational(1), power); }

    // Accepts e.g. "1 - 2*h + 3/4*h^2" in any term order.
    static HPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Lowest power with a nonzero coefficient; -1 for zero.
    int valuation() const;
    bool is_monomial() const;

    const Rational& coefficient(int power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    HPoly& operator+=(const HPoly& other);
    HPoly& operator-=(const HPoly& other);
    HPoly& operator*=(const HPoly& other);
    HPoly& operator*=(const Rational& scalar);

    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b) { HPoly c = a; c *= b; return c; }
    friend HPoly operator*(HPoly a, const Rational& s) { return a *= s; }
    friend HPoly operator*(const Rational& s, HPoly a) { return a *= s; }
    HPoly operator-() const;

    // Multiply by h^power.
    HPoly shifted(int power) const;

    friend bool operator==(const HPoly&, const HPoly&) = default;

    Rational eval(const Rational& h) const;
    double eval(double h) const;
    std::complex<double> eval(std::complex<double> h) const;

    // Ascending in h-degree; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HPoly& p);

}  // namespace qmzv
