#pragma once

#include <string_view>
#include <variant>

#include "qmzv/element.hpp"

namespace qmzv {

// C-submodules of H^1 used as domains of the structural maps.
enum class Space {
    H0hat,    // C + xi H^1 + sum_{k>=2} z_k H^1
    H0,       // C + words z_{k1}...z_{kr} with k1 >= 2
    H0tilde,  // xi H^1 + sum_{k>=2} z_k H^1
    Hge1,     // C + sum_{k>=1} z_k H^1
    Hge2,     // C + sum_{k>=2} z_k H^1
};

bool word_in(const AWord& w, Space space);
bool membership(const AElement& e, Space space);

// Non-empty word whose first letter is xi or z_k with k >= 2.
inline bool admissible_start(const AWord& w) {
    return !w.empty() && (w.front().is_xi() || w.front().k() >= 2);
}

// xi -> y - rho, z_k -> x^{k-1} y, extended multiplicatively and linearly.
XElement expand_to_x(const AWord& w);
XElement expand_to_x(const AElement& e);

// Inverse of expand_to_x on H^1: words are cut into blocks x^{k-1}y -> z_k and
// rho -> z_1 - xi. Throws NotInH1 for an x-run not closed by y.
AElement contract_to_a(const XElement& e);

// rho written in the A-basis.
AElement rho_a();
// rho^r in the A-basis.
AElement rho_power(int r);

// Expression grammar:
//   element := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := rational | 'h' ['^' int] | word
//   word    := letter (whitespace letter)*,  letter := x | y | r | xi | z<k>
AElement parse_a_element(std::string_view text);
XElement parse_x_element(std::string_view text);
// Chooses the X-basis when any of x, y, r occurs, the A-basis otherwise.
std::variant<AElement, XElement> parse_element(std::string_view text);

template <class W>
std::string print_element(const Element<W>& e) {
    return e.to_string();
}

}  // namespace qmzv
