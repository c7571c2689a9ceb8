#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qmzv/hpoly.hpp"
#include "qmzv/word.hpp"

namespace qmzv {

// Finite C-linear combination of words, C = Q[h].
//
// Terms are kept in the graded lexicographic word order with no zero
// coefficients, so equality of elements is equality of the term maps.
template <class W>
class Element {
public:
    using word_type = W;
    using term_map = std::map<W, HPoly>;

    Element() = default;
    Element(W word) { terms_.emplace(std::move(word), HPoly(1)); }  // NOLINT(google-explicit-constructor)
    Element(W word, HPoly coefficient) { add(std::move(word), std::move(coefficient)); }

    static Element one() { return Element(W{}); }
    static Element constant(HPoly c) { return Element(W{}, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    HPoly coefficient(const W& word) const {
        auto it = terms_.find(word);
        return it == terms_.end() ? HPoly{} : it->second;
    }

    void add(const W& word, const HPoly& coefficient) {
        if (coefficient.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(word, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // this += c * other
    void add_scaled(const Element& other, const HPoly& c) {
        if (c.is_zero()) {
            return;
        }
        for (const auto& [w, p] : other.terms_) {
            add(w, p * c);
        }
    }

    Element& operator+=(const Element& other) {
        for (const auto& [w, p] : other.terms_) {
            add(w, p);
        }
        return *this;
    }
    Element& operator-=(const Element& other) {
        for (const auto& [w, p] : other.terms_) {
            add(w, -p);
        }
        return *this;
    }
    Element& operator*=(const HPoly& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= c;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const HPoly& c) { return a *= c; }
    friend Element operator*(const HPoly& c, Element a) { return a *= c; }
    Element operator-() const { return *this * HPoly(-1); }

    // Concatenation product of the free algebra.
    friend Element operator*(const Element& a, const Element& b) {
        Element out;
        for (const auto& [wa, pa] : a.terms_) {
            for (const auto& [wb, pb] : b.terms_) {
                out.add(wa + wb, pa * pb);
            }
        }
        return out;
    }

    // Left multiplication by a single word.
    Element prepend(const W& prefix) const {
        Element out;
        for (const auto& [w, p] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), prefix + w, p);
        }
        return out;
    }

    friend bool operator==(const Element&, const Element&) = default;

    // Weight d when every term is h^j * word with j + deg(word) = d; nullopt otherwise
    // (including the zero element, which is homogeneous of every weight).
    std::optional<int> homogeneous_weight() const {
        std::optional<int> d;
        for (const auto& [w, p] : terms_) {
            const auto& cs = p.coefficients();
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (cs[j].is_zero()) {
                    continue;
                }
                const int wt = static_cast<int>(j) + w.degree();
                if (d && *d != wt) {
                    return std::nullopt;
                }
                d = wt;
            }
        }
        return d;
    }

    // Canonical text: one term per (h-power, word), ordered by ascending
    // h-power and then by word; "0" for the zero element.
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::vector<std::tuple<int, const W*, const Rational*>> pieces;
        for (const auto& [w, p] : terms_) {
            const auto& cs = p.coefficients();
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (!cs[j].is_zero()) {
                    pieces.emplace_back(static_cast<int>(j), &w, &cs[j]);
                }
            }
        }
        std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
            return std::get<0>(a) < std::get<0>(b);
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [j, w, c] : pieces) {
            if (first) {
                if (c->sign() < 0) {
                    os << "-";
                }
            } else {
                os << (c->sign() < 0 ? " - " : " + ");
            }
            first = false;
            const Rational mag = c->abs();
            std::vector<std::string> factors;
            if (!mag.is_one() || (j == 0 && w->empty())) {
                factors.push_back(mag.to_string());
            }
            if (j == 1) {
                factors.emplace_back("h");
            } else if (j > 1) {
                factors.push_back("h^" + std::to_string(j));
            }
            if (!w->empty()) {
                factors.push_back(w->to_string());
            }
            for (std::size_t i = 0; i < factors.size(); ++i) {
                os << (i > 0 ? "*" : "") << factors[i];
            }
        }
        return os.str();
    }

private:
    term_map terms_;
};

using AElement = Element<AWord>;
using XElement = Element<XWord>;

template <class W>
std::ostream& operator<<(std::ostream& os, const Element<W>& e) {
    return os << e.to_string();
}

}  // namespace qmzv
