#include "qmzv/algebra.hpp"

#include <string>
#include <vector>

#include "qmzv/detail/lexer.hpp"
#include "qmzv/error.hpp"

namespace qmzv {

bool word_in(const AWord& w, Space space) {
    if (w.empty()) {
        return space != Space::H0tilde;
    }
    const ALetter first = w.front();
    switch (space) {
        case Space::H0hat:
        case Space::H0tilde:
            return first.is_xi() || first.k() >= 2;
        case Space::H0:
            if (first.is_xi() || first.k() < 2) {
                return false;
            }
            for (std::size_t i = 1; i < w.size(); ++i) {
                if (w[i].is_xi()) {
                    return false;
                }
            }
            return true;
        case Space::Hge1:
            return !first.is_xi();
        case Space::Hge2:
            return !first.is_xi() && first.k() >= 2;
    }
    return false;
}

bool membership(const AElement& e, Space space) {
    for (const auto& [w, c] : e.terms()) {
        if (!word_in(w, space)) {
            return false;
        }
    }
    return true;
}

XElement expand_to_x(const AWord& w) {
    XElement acc = XElement::one();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const ALetter l = w[i];
        XElement letter;
        if (l.is_xi()) {
            letter.add(XWord{XLetter::y}, HPoly(1));
            letter.add(XWord{XLetter::rho}, HPoly(-1));
        } else {
            XWord block;
            for (int j = 1; j < l.k(); ++j) {
                block.push_back(XLetter::x);
            }
            block.push_back(XLetter::y);
            letter = XElement(block);
        }
        acc = acc * letter;
    }
    return acc;
}

XElement expand_to_x(const AElement& e) {
    XElement out;
    for (const auto& [w, c] : e.terms()) {
        out.add_scaled(expand_to_x(w), c);
    }
    return out;
}

AElement rho_a() {
    AElement r;
    r.add(AWord{ALetter::z(1)}, HPoly(1));
    r.add(AWord{ALetter::xi()}, HPoly(-1));
    return r;
}

AElement rho_power(int r) {
    AElement acc = AElement::one();
    const AElement rho = rho_a();
    for (int i = 0; i < r; ++i) {
        acc = acc * rho;
    }
    return acc;
}

namespace {

AElement contract_word(const XWord& w) {
    AElement acc = AElement::one();
    AWord pending;  // run of z-blocks not yet multiplied in
    int x_run = 0;
    auto flush = [&] {
        if (!pending.empty()) {
            acc = acc * AElement(pending);
            pending = AWord{};
        }
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (w[i]) {
            case XLetter::x:
                ++x_run;
                break;
            case XLetter::y:
                pending.push_back(ALetter::z(x_run + 1));
                x_run = 0;
                break;
            case XLetter::rho:
                if (x_run > 0) {
                    throw NotInH1("x followed by rho in '" + w.to_string() + "'");
                }
                flush();
                acc = acc * rho_a();
                break;
        }
    }
    if (x_run > 0) {
        throw NotInH1("trailing x in '" + w.to_string() + "'");
    }
    flush();
    return acc;
}

struct RawTerm {
    HPoly coefficient;
    std::vector<detail::Token> letters;
};

bool is_x_letter(std::string_view t) { return t == "x" || t == "y" || t == "r"; }

bool is_letter(std::string_view t) {
    if (is_x_letter(t) || t == "xi") {
        return true;
    }
    return t.size() >= 2 && t[0] == 'z';
}

void parse_factor(detail::Lexer& lex, RawTerm& term) {
    const detail::Token t = lex.peek();
    if (t.kind == detail::TokenKind::number) {
        std::string text(lex.next().text);
        if (lex.peek().kind == detail::TokenKind::slash) {
            lex.next();
            text += "/";
            text += lex.expect(detail::TokenKind::number, "denominator").text;
        }
        term.coefficient *= Rational::parse(text);
        return;
    }
    if (t.kind != detail::TokenKind::ident) {
        throw ParseError("expected a coefficient or a word", t.position);
    }
    if (t.text == "h") {
        lex.next();
        int exponent = 1;
        if (lex.peek().kind == detail::TokenKind::caret) {
            lex.next();
            exponent = std::stoi(std::string(lex.expect(detail::TokenKind::number, "exponent").text));
        }
        term.coefficient = term.coefficient.shifted(exponent);
        return;
    }
    if (!term.letters.empty()) {
        throw ParseError("a term may contain only one word", t.position);
    }
    while (lex.peek().kind == detail::TokenKind::ident && lex.peek().text != "h") {
        const detail::Token l = lex.next();
        if (!is_letter(l.text)) {
            throw ParseError("unknown letter '" + std::string(l.text) + "'", l.position);
        }
        term.letters.push_back(l);
    }
}

std::vector<RawTerm> parse_raw(std::string_view text) {
    detail::Lexer lex(text);
    std::vector<RawTerm> terms;
    bool first = true;
    do {
        RawTerm term{HPoly(1), {}};
        if (lex.peek().kind == detail::TokenKind::plus) {
            lex.next();
        } else if (lex.peek().kind == detail::TokenKind::minus) {
            lex.next();
            term.coefficient = HPoly(-1);
        } else if (!first) {
            throw ParseError("expected '+' or '-'", lex.peek().position);
        }
        parse_factor(lex, term);
        while (lex.peek().kind == detail::TokenKind::star) {
            lex.next();
            parse_factor(lex, term);
        }
        terms.push_back(std::move(term));
        first = false;
    } while (lex.peek().kind != detail::TokenKind::end);
    return terms;
}

ALetter to_a_letter(const detail::Token& t) {
    if (t.text == "xi") {
        return ALetter::xi();
    }
    if (t.text.size() < 2 || t.text[0] != 'z' ||
        t.text.find_first_not_of("0123456789", 1) != std::string_view::npos) {
        throw ParseError("'" + std::string(t.text) + "' is not a letter of the A alphabet", t.position);
    }
    const long k = std::stol(std::string(t.text.substr(1)));
    if (k < 1 || k > ALetter::max_k) {
        throw ParseError("z_k needs 1 <= k <= 255", t.position);
    }
    return ALetter::z(static_cast<int>(k));
}

XLetter to_x_letter(const detail::Token& t) {
    if (t.text == "x") {
        return XLetter::x;
    }
    if (t.text == "y") {
        return XLetter::y;
    }
    if (t.text == "r") {
        return XLetter::rho;
    }
    throw ParseError("'" + std::string(t.text) + "' is not a letter of the {x, y, r} alphabet", t.position);
}

AElement build_a(const std::vector<RawTerm>& raw) {
    AElement e;
    for (const auto& t : raw) {
        AWord w;
        for (const auto& l : t.letters) {
            w.push_back(to_a_letter(l));
        }
        e.add(w, t.coefficient);
    }
    return e;
}

XElement build_x(const std::vector<RawTerm>& raw) {
    XElement e;
    for (const auto& t : raw) {
        XWord w;
        for (const auto& l : t.letters) {
            w.push_back(to_x_letter(l));
        }
        e.add(w, t.coefficient);
    }
    return e;
}

}  // namespace

AElement contract_to_a(const XElement& e) {
    AElement out;
    for (const auto& [w, c] : e.terms()) {
        out.add_scaled(contract_word(w), c);
    }
    return out;
}

AElement parse_a_element(std::string_view text) { return build_a(parse_raw(text)); }

XElement parse_x_element(std::string_view text) { return build_x(parse_raw(text)); }

std::variant<AElement, XElement> parse_element(std::string_view text) {
    const auto raw = parse_raw(text);
    for (const auto& t : raw) {
        for (const auto& l : t.letters) {
            if (is_x_letter(l.text)) {
                return build_x(raw);
            }
        }
    }
    return build_a(raw);
}

}  // namespace qmzv
