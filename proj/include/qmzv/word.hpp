#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qmzv {

// Letter of the alphabet A = {xi} u {z_k : k >= 1}. Code 0 is xi, code k is z_k.
class ALetter {
public:
    static constexpr int max_k = 255;

    static constexpr ALetter xi() { return ALetter(0); }
    static ALetter z(int k);
    static constexpr ALetter from_code(std::uint8_t code) { return ALetter(code); }

    constexpr bool is_xi() const { return code_ == 0; }
    // k of z_k; 0 for xi.
    constexpr int k() const { return code_; }
    constexpr int degree() const { return code_ == 0 ? 1 : code_; }
    constexpr std::uint8_t code() const { return code_; }
    std::string name() const;

    friend constexpr bool operator==(ALetter, ALetter) = default;
    friend constexpr auto operator<=>(ALetter, ALetter) = default;

private:
    constexpr explicit ALetter(std::uint8_t code) : code_(code) {}
    std::uint8_t code_;
};

// Letter of the ambient alphabet {x, y, rho}, ordered x < y < rho.
enum class XLetter : std::uint8_t { x = 0, y = 1, rho = 2 };

template <class Letter>
struct LetterTraits;

template <>
struct LetterTraits<ALetter> {
    static std::uint8_t code(ALetter l) { return l.code(); }
    static ALetter letter(std::uint8_t c) { return ALetter::from_code(c); }
    static int degree(std::uint8_t c) { return c == 0 ? 1 : c; }
    static std::string name(std::uint8_t c) { return ALetter::from_code(c).name(); }
};

template <>
struct LetterTraits<XLetter> {
    static std::uint8_t code(XLetter l) { return static_cast<std::uint8_t>(l); }
    static XLetter letter(std::uint8_t c) { return static_cast<XLetter>(c); }
    static int degree(std::uint8_t) { return 1; }
    static std::string name(std::uint8_t c) {
        static constexpr const char* names[] = {"x", "y", "r"};
        return names[c];
    }
};

// Finite word over an alphabet; the empty word is the unit 1.
//
// Stored as a byte string of letter codes so that words hash and compare
// cheaply. The ordering is graded lexicographic: by degree, then letter by
// letter, a proper prefix sorting first.
template <class Letter>
class Word {
    using Traits = LetterTraits<Letter>;

public:
    using letter_type = Letter;

    Word() = default;
    Word(std::initializer_list<Letter> letters) {
        for (Letter l : letters) {
            push_back(l);
        }
    }
    static Word from_codes(std::string codes) {
        Word w;
        w.codes_ = std::move(codes);
        return w;
    }

    bool empty() const { return codes_.empty(); }
    std::size_t size() const { return codes_.size(); }
    Letter operator[](std::size_t i) const { return Traits::letter(code(i)); }
    Letter front() const { return (*this)[0]; }
    std::uint8_t code(std::size_t i) const { return static_cast<std::uint8_t>(codes_[i]); }
    const std::string& codes() const { return codes_; }

    int degree() const {
        int d = 0;
        for (std::size_t i = 0; i < codes_.size(); ++i) {
            d += Traits::degree(code(i));
        }
        return d;
    }

    void push_back(Letter l) { codes_.push_back(static_cast<char>(Traits::code(l))); }

    // Letters [from, end).
    Word suffix(std::size_t from) const { return from_codes(codes_.substr(from)); }
    Word prefix(std::size_t count) const { return from_codes(codes_.substr(0, count)); }

    friend Word operator+(const Word& a, const Word& b) { return from_codes(a.codes_ + b.codes_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) {
            return c;
        }
        // char_traits<char>::compare orders bytes as unsigned char.
        const int c = a.codes_.compare(b.codes_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Letters separated by single spaces; "1" for the empty word.
    std::string to_string() const {
        if (empty()) {
            return "1";
        }
        std::string out;
        for (std::size_t i = 0; i < codes_.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += Traits::name(code(i));
        }
        return out;
    }

private:
    std::string codes_;
};

using AWord = Word<ALetter>;
using XWord = Word<XLetter>;

// Composition (k_1, ..., k_r) of positive integers; admissible when empty or k_1 >= 2.
struct Index {
    std::vector<int> parts;

    bool admissible() const { return parts.empty() || parts.front() >= 2; }
    int weight() const;
    std::size_t depth() const { return parts.size(); }

    // Comma separated parts, "" for the empty index.
    std::string to_string() const;
    static Index parse(std::string_view text);

    friend bool operator==(const Index&, const Index&) = default;
    // Weight first, then parts lexicographically: "", "2", "2,1", "3", ...
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) {
            return c;
        }
        return a.parts <=> b.parts;
    }
};

// hbar^power * word; the weight counts hbar and every letter degree.
struct Monomial {
    int hbar_power = 0;
    AWord word;

    int weight() const { return hbar_power + word.degree(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Word first: inside one weight the word determines the hbar power.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.word <=> b.word; c != 0) {
            return c;
        }
        return a.hbar_power <=> b.hbar_power;
    }
};

int weight(const Monomial& m);

AWord index_to_word(const Index& index);
// Throws NotAnIndexWord when the word contains xi.
Index word_to_index(const AWord& word);

}  // namespace qmzv

template <class Letter>
struct std::hash<qmzv::Word<Letter>> {
    std::size_t operator()(const qmzv::Word<Letter>& w) const noexcept {
        return std::hash<std::string>{}(w.codes());
    }
};
