#include "qmzv/hpoly.hpp"

#include <ostream>
#include <sstream>

#include "qmzv/detail/lexer.hpp"

namespace qmzv {

namespace {

const Rational kZero{0};

// factor := number ['/' number] | 'h' ['^' number]
// Multiplies the factor into (scalar, power).
void parse_coefficient_factor(detail::Lexer& lex, Rational& scalar, int& power) {
    const detail::Token& t = lex.peek();
    if (t.kind == detail::TokenKind::number) {
        std::string text(lex.next().text);
        if (lex.peek().kind == detail::TokenKind::slash) {
            lex.next();
            text += "/";
            text += lex.expect(detail::TokenKind::number, "denominator").text;
        }
        scalar *= Rational::parse(text);
        return;
    }
    if (t.kind == detail::TokenKind::ident && t.text == "h") {
        lex.next();
        int exponent = 1;
        if (lex.peek().kind == detail::TokenKind::caret) {
            lex.next();
            const detail::Token e = lex.expect(detail::TokenKind::number, "exponent");
            exponent = std::stoi(std::string(e.text));
        }
        power += exponent;
        return;
    }
    throw ParseError("expected number or 'h'", t.position);
}

}  // namespace

HPoly::HPoly(Rational constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

HPoly::HPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

HPoly HPoly::monomial(Rational c, int power) {
    if (c.is_zero()) {
        return {};
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
    coeffs.back() = std::move(c);
    HPoly p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

HPoly HPoly::parse(std::string_view text) {
    detail::Lexer lex(text);
    HPoly result;
    bool first = true;
    while (lex.peek().kind != detail::TokenKind::end || first) {
        Rational sign(1);
        if (lex.peek().kind == detail::TokenKind::plus) {
            lex.next();
        } else if (lex.peek().kind == detail::TokenKind::minus) {
            lex.next();
            sign = Rational(-1);
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lex.peek().position);
        }
        Rational scalar = sign;
        int power = 0;
        parse_coefficient_factor(lex, scalar, power);
        while (lex.peek().kind == detail::TokenKind::star) {
            lex.next();
            parse_coefficient_factor(lex, scalar, power);
        }
        result += monomial(scalar, power);
        first = false;
    }
    return result;
}

int HPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

bool HPoly::is_monomial() const { return !is_zero() && valuation() == degree(); }

const Rational& HPoly::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return kZero;
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

HPoly& HPoly::operator+=(const HPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

HPoly& HPoly::operator*=(const HPoly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

HPoly& HPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

HPoly HPoly::operator-() const {
    HPoly p = *this;
    for (auto& c : p.coeffs_) {
        c = -c;
    }
    return p;
}

HPoly HPoly::shifted(int power) const {
    if (is_zero() || power == 0) {
        return *this;
    }
    HPoly p;
    p.coeffs_.resize(static_cast<std::size_t>(power));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

Rational HPoly::eval(const Rational& h) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * h + *it;
    }
    return acc;
}

double HPoly::eval(double h) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * h + it->to_double();
    }
    return acc;
}

std::complex<double> HPoly::eval(std::complex<double> h) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * h + it->to_double();
    }
    return acc;
}

std::string HPoly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational mag = c.abs();
        if (i == 0) {
            os << mag;
        } else {
            if (!mag.is_one()) {
                os << mag << "*";
            }
            os << "h";
            if (i > 1) {
                os << "^" << i;
            }
        }
        first = false;
    }
    return os.str();
}

void HPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << p.to_string(); }

}  // namespace qmzv
