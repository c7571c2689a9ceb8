#include "qmzv/word.hpp"

#include <numeric>

#include "qmzv/error.hpp"

namespace qmzv {

ALetter ALetter::z(int k) {
    if (k < 1 || k > max_k) {
        throw Error("z_k requires 1 <= k <= 255, got " + std::to_string(k));
    }
    return ALetter(static_cast<std::uint8_t>(k));
}

std::string ALetter::name() const { return is_xi() ? "xi" : "z" + std::to_string(k()); }

int Index::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Index::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts[i]);
    }
    return out;
}

Index Index::parse(std::string_view text) {
    Index index;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view part = text.substr(pos, end - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
            throw ParseError("malformed index '" + std::string(text) + "'", pos);
        }
        const int k = std::stoi(std::string(part));
        if (k < 1) {
            throw ParseError("index parts must be positive", pos);
        }
        index.parts.push_back(k);
        pos = end + 1;
        if (end + 1 == text.size()) {
            throw ParseError("trailing comma in index", end);
        }
    }
    return index;
}

int weight(const Monomial& m) { return m.weight(); }

AWord index_to_word(const Index& index) {
    AWord w;
    for (int k : index.parts) {
        w.push_back(ALetter::z(k));
    }
    return w;
}

Index word_to_index(const AWord& word) {
    Index index;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i].is_xi()) {
            throw NotAnIndexWord("word '" + word.to_string() + "' contains xi");
        }
        index.parts.push_back(word[i].k());
    }
    return index;
}

}  // namespace qmzv
