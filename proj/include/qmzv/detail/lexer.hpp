#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "qmzv/error.hpp"

namespace qmzv::detail {

enum class TokenKind { number, ident, plus, minus, star, slash, caret, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string_view text;
    std::size_t position = 0;
};

// Tokenizer shared by the polynomial and element parsers. Identifiers are a
// run of lowercase letters followed by an optional run of digits ("xi", "z12").
class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    Token expect(TokenKind kind, const char* what) {
        if (current_.kind != kind) {
            throw ParseError(std::string("expected ") + what, current_.position);
        }
        return next();
    }

private:
    void advance() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
        current_.position = pos_;
        if (pos_ == input_.size()) {
            current_ = Token{TokenKind::end, {}, pos_};
            return;
        }
        const std::size_t start = pos_;
        const char c = input_[pos_];
        auto single = [&](TokenKind kind) {
            ++pos_;
            current_ = Token{kind, input_.substr(start, 1), start};
        };
        switch (c) {
            case '+': single(TokenKind::plus); return;
            case '-': single(TokenKind::minus); return;
            case '*': single(TokenKind::star); return;
            case '/': single(TokenKind::slash); return;
            case '^': single(TokenKind::caret); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
                ++pos_;
            }
            current_ = Token{TokenKind::number, input_.substr(start, pos_ - start), start};
            return;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            while (pos_ < input_.size() && std::islower(static_cast<unsigned char>(input_[pos_]))) {
                ++pos_;
            }
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
                ++pos_;
            }
            current_ = Token{TokenKind::ident, input_.substr(start, pos_ - start), start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    Token current_;
};

}  // namespace qmzv::detail
