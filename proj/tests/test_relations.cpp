#include <algorithm>
#include <map>

#include "doctest.h"
#include "qmzv/checks.hpp"
#include "qmzv/error.hpp"
#include "qmzv/relations.hpp"
#include "qmzv/serialize.hpp"

using namespace qmzv;

namespace {

AElement A(const char* s) { return parse_a_element(s); }

SparseRow to_sparse(const RationalRow& r) {
    SparseRow s;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (!r[j].is_zero()) {
            s.emplace_back(j, r[j]);
        }
    }
    return s;
}

// Sparse coordinates of an element over the weight-d monomial basis.
SparseRow coordinates(const AElement& e, const GradedBasis& basis) {
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        col.emplace(basis.monomials[i], i);
    }
    SparseRow row;
    for (const auto& [w, c] : e.terms()) {
        for (std::size_t j = 0; j < c.coefficients().size(); ++j) {
            if (!c.coefficients()[j].is_zero()) {
                row.emplace_back(col.at(Monomial{static_cast<int>(j), w}), c.coefficients()[j]);
            }
        }
    }
    std::sort(row.begin(), row.end());
    return row;
}

}  // namespace

TEST_CASE("double shuffle generators") {
    const std::vector<Generator> d2 = gen_double_shuffle(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].element == A("z2 - h*xi - xi z1 + xi xi"));
    // three pairs of weight 3 plus the h-lift of the weight-2 generator
    const std::vector<Generator> d3 = gen_double_shuffle(3);
    CHECK(d3.size() == 4);
    for (int d = 2; d <= 5; ++d) {
        for (const Generator& g : gen_double_shuffle(d)) {
            CHECK(g.element.homogeneous_weight() == std::optional<int>(d));
            CHECK(membership(g.element, Space::H0hat));
        }
    }
}

TEST_CASE("resummation generators") {
    const std::vector<Generator> d2 = gen_resummation(2, false);
    REQUIRE(d2.size() == 1);
    const AElement g = phi(2) - phi(1) * rho_a();
    CHECK((d2[0].element == g || d2[0].element == -g));
    CHECK(g == A("z2 - h*xi - xi z1 + xi xi"));
    CHECK(gen_resummation(1, true).empty());
    CHECK(gen_resummation(4, true).size() > gen_resummation(4, false).size());
    for (int d = 2; d <= 5; ++d) {
        for (const Generator& r : gen_resummation(d, true)) {
            CHECK(r.element.homogeneous_weight() == std::optional<int>(d));
            CHECK(membership(r.element, Space::H0hat));
        }
    }
}

TEST_CASE("generators lie in the kernel of Zbar_q (weights <= 6)") {
    for (const char* q : {"1/2", "1/3"}) {
        const QContext ctx = QContext::rational(Rational::parse(q));
        ProductCache cache;
        for (int d = 2; d <= 6; ++d) {
            for (const Generator& g : gen_double_shuffle(d, &cache)) {
                const Check c = kernel_check(g.element, ctx);
                CHECK_MESSAGE(c.ok, g.provenance);
                CHECK(c.difference < 1e-9);
            }
            for (const Generator& g : gen_resummation(d, true)) {
                const Check c = kernel_check(g.element, ctx);
                CHECK_MESSAGE(c.ok, g.provenance);
                CHECK(c.difference < 1e-9);
            }
        }
    }
}

TEST_CASE("Hoffman's identity") {
    CHECK(gen_hoffman(Index{{2}}) == A("z3 - z2 z1"));
    CHECK(gen_hoffman(Index{{2, 1}}) == A("z3 z1 + z2 z2 - z2 z1 z1 - z2 z2 + z2 z2"));
    CHECK(gen_hoffman(Index{{2, 1}}) == A("z3 z1 + z2 z2 - z2 z1 z1"));
    CHECK_THROWS_AS(gen_hoffman(Index{{1, 2}}), NotAdmissible);
    CHECK_THROWS_AS(gen_hoffman(Index{}), NotAdmissible);
    const QContext ctx;
    for (const Index& k : admissible_indices(5)) {
        if (k.parts.empty()) {
            continue;
        }
        const AElement h = gen_hoffman(k);
        CHECK(h.homogeneous_weight() == std::optional<int>(k.weight() + 1));
        CHECK(membership(h, Space::H0));
        CHECK(std::abs(zbar_q(h, ctx).value) < 1e-9);
        const int d = k.weight() + 1;
        const GradedBasis basis = enumerate_basis(d);
        EchelonBuilder span(basis.size());
        for (const Generator& g : gen_double_shuffle(d)) {
            span.insert(coordinates(g.element, basis));
        }
        CHECK_MESSAGE(span.reduces_to_zero(coordinates(h, basis)), k.to_string());
    }
}

TEST_CASE("intersection with H0") {
    const RelationBasis b2 = relation_basis(2, true);
    CHECK(b2.dimension() == 0);
    CHECK(b2.index_basis == std::vector<Index>{Index{}, Index{{2}}});
    const RelationBasis b3 = relation_basis(3, true);
    REQUIRE(b3.dimension() == 1);
    CHECK(b3.index_basis == std::vector<Index>{Index{}, Index{{2}}, Index{{2, 1}}, Index{{3}}});
    CHECK(b3.rows[0] == RationalRow{0, 0, 1, -1});
    CHECK(b3.row_element(0) == A("z2 z1 - z3"));
    CHECK_THROWS_AS(intersect_with_h0({{A("z2 + z3"), "bad"}}, 3), NotHomogeneous);
}

TEST_CASE("relation bases are in reduced row-echelon form") {
    for (int d = 2; d <= 5; ++d) {
        const RelationBasis b = relation_basis(d, true);
        CHECK(rref(b.rows, b.index_basis.size()).rows == b.rows);
    }
}

TEST_CASE("dimension table up to weight 5") {
    for (bool lifts : {true, false}) {
        const std::vector<DimsRow> t = dims_table(5, lifts);
        REQUIRE(t.size() == 4);
        const std::size_t idx[] = {1, 3, 7, 15}, dim[] = {0, 1, 3, 8}, bound[] = {1, 2, 4, 7};
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(t[i].weight == static_cast<int>(i) + 2);
            CHECK(t[i].indices == idx[i]);
            CHECK(t[i].dimension == dim[i]);
            CHECK(t[i].bound() == bound[i]);
        }
    }
}

TEST_CASE("monotonicity in the weight") {
    for (int d = 3; d <= 6; ++d) {
        const RelationBasis lower = relation_basis(d - 1, true);
        const RelationBasis upper = relation_basis(d, true);
        EchelonBuilder span(upper.index_basis.size());
        for (const RationalRow& r : upper.rows) {
            span.insert(to_sparse(r));
        }
        for (const RationalRow& r : lower.rows) {
            RationalRow embedded(upper.index_basis.size());
            for (std::size_t j = 0; j < r.size(); ++j) {
                const auto it = std::find(upper.index_basis.begin(), upper.index_basis.end(), lower.index_basis[j]);
                REQUIRE(it != upper.index_basis.end());
                embedded[static_cast<std::size_t>(it - upper.index_basis.begin())] = r[j];
            }
            CHECK(span.reduces_to_zero(to_sparse(embedded)));
        }
    }
}

TEST_CASE("determinism under reordered generators") {
    std::vector<Generator> gens = gen_double_shuffle(5);
    for (Generator& g : gen_resummation(5, true)) {
        gens.push_back(std::move(g));
    }
    const RelationBasis a = intersect_with_h0(gens, 5);
    std::reverse(gens.begin(), gens.end());
    const RelationBasis b = intersect_with_h0(gens, 5);
    CHECK(a.rows == b.rows);
    CHECK(a.provenance == b.provenance);
    CHECK(to_json(relation_basis(4, true)) == to_json(relation_basis(4, true)));
}

TEST_CASE("numeric verification of relation bases") {
    const QContext ctx;
    const RelationBasis b3 = relation_basis(3, true);
    const NumericReport r3 = verify_numeric(b3, ctx);
    CHECK(r3.ok());
    CHECK(r3.max_abs < 1e-9);
    const NumericReport r4 = verify_numeric(relation_basis(4, true), ctx);
    CHECK(r4.ok());
    CHECK(r4.max_abs < 1e-9);
    CHECK(verify_numeric(relation_basis(2, true), ctx).rows.empty());
    RelationBasis broken = b3;
    broken.rows[0][3] = Rational(5);
    CHECK(verify_numeric(broken, ctx).first_failure() == std::optional<std::size_t>(0));
}

TEST_CASE("serialization round trip") {
    const RelationBasis b = relation_basis(4, false);
    const std::string text = to_json(b);
    RelationBasis back = from_json(text);
    CHECK(back.weight == b.weight);
    CHECK(back.hbar_lifts == b.hbar_lifts);
    CHECK(back.index_basis == b.index_basis);
    CHECK(back.rows == b.rows);
    CHECK(to_json(back) == text);
    RelationBasis fractions;
    fractions.weight = 3;
    fractions.index_basis = {Index{}, Index{{2}}};
    fractions.rows = {{Rational(-7, 3), Rational(1)}};
    CHECK(to_json(fractions).find("\"-7/3\"") != std::string::npos);
    CHECK(from_json(to_json(fractions)).rows == fractions.rows);
    CHECK_THROWS_AS(from_json("{"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"version":1,"weight":2})"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"version":2,"weight":2,"mode":{"hbar_lifts":true},"index_basis":[],"relations":[]})"),
                    ParseError);
    CHECK_THROWS_AS(from_json(R"({"version":1,"weight":2,"mode":{"hbar_lifts":true},"index_basis":["","2"],"relations":[["1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(from_json(R"({"version":1,"weight":2,"mode":{"hbar_lifts":true},"index_basis":["","2"],"relations":[["1","x"]]})"),
                    ParseError);
}
