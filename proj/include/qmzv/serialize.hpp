#pragma once

#include <string>
#include <string_view>

#include "qmzv/relations.hpp"

namespace qmzv {

// {"version":1,"weight":d,"mode":{"hbar_lifts":b},"index_basis":[...],"relations":[[...]]}
// with rationals as "p" or "p/q" strings. Provenance is not serialized.
std::string to_json(const RelationBasis& basis, int indent = 2);

// Throws ParseError on malformed documents or inconsistent row lengths.
RelationBasis from_json(std::string_view text);

}  // namespace qmzv
