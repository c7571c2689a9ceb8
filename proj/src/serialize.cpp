#include "qmzv/serialize.hpp"

#include "json.hpp"

#include "qmzv/error.hpp"

namespace qmzv {

namespace {

constexpr int kVersion = 1;

using nlohmann::json;

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ParseError(std::string("relation document lacks '") + key + "'", 0);
    }
    return *it;
}

}  // namespace

std::string to_json(const RelationBasis& basis, int indent) {
    json doc;
    doc["version"] = kVersion;
    doc["weight"] = basis.weight;
    doc["mode"] = {{"hbar_lifts", basis.hbar_lifts}};
    json indices = json::array();
    for (const Index& k : basis.index_basis) {
        indices.push_back(k.to_string());
    }
    doc["index_basis"] = std::move(indices);
    json rows = json::array();
    for (const RationalRow& row : basis.rows) {
        json r = json::array();
        for (const Rational& c : row) {
            r.push_back(c.to_string());
        }
        rows.push_back(std::move(r));
    }
    doc["relations"] = std::move(rows);
    return doc.dump(indent) + "\n";
}

RelationBasis from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        if (field(doc, "version").get<int>() != kVersion) {
            throw ParseError("unsupported relation document version", 0);
        }
        RelationBasis basis;
        basis.weight = field(doc, "weight").get<int>();
        basis.hbar_lifts = field(field(doc, "mode"), "hbar_lifts").get<bool>();
        for (const json& k : field(doc, "index_basis")) {
            basis.index_basis.push_back(Index::parse(k.get<std::string>()));
        }
        const json& rows = field(doc, "relations");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            RationalRow row;
            for (const json& c : rows[i]) {
                row.push_back(Rational::parse(c.get<std::string>()));
            }
            if (row.size() != basis.index_basis.size()) {
                throw ParseError("relation row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(basis.index_basis.size()),
                                 0);
            }
            basis.rows.push_back(std::move(row));
        }
        return basis;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed relation document: ") + e.what(), 0);
    }
}

}  // namespace qmzv
