#include <random>
#include <set>

#include "doctest.h"
#include "qmzv/algebra.hpp"
#include "qmzv/error.hpp"
#include "qmzv/relations.hpp"
#include "support.hpp"

using namespace qmzv;

namespace {

AElement A(const char* s) { return parse_a_element(s); }
XElement X(const char* s) { return parse_x_element(s); }

}  // namespace

TEST_CASE("letters and words") {
    CHECK(ALetter::xi().degree() == 1);
    CHECK(ALetter::z(4).degree() == 4);
    CHECK_THROWS(ALetter::z(0));
    const AWord w{ALetter::z(3), ALetter::xi(), ALetter::z(1)};
    CHECK(w.degree() == 5);
    CHECK(w.to_string() == "z3 xi z1");
    CHECK(AWord{}.to_string() == "1");
    CHECK(XWord{XLetter::x, XLetter::rho}.degree() == 2);
}

TEST_CASE("graded word order") {
    // degree first, then xi < z1 < z2 letter by letter
    CHECK(AWord{ALetter::z(2)} > AWord{ALetter::xi()});
    CHECK(AWord{ALetter::xi(), ALetter::xi()} < AWord{ALetter::xi(), ALetter::z(1)});
    CHECK(AWord{ALetter::z(1), ALetter::z(1)} < AWord{ALetter::z(2)});
    CHECK(AWord{} < AWord{ALetter::xi()});
}

TEST_CASE("expand_to_x") {
    CHECK(expand_to_x(A("z2")) == X("x y"));
    CHECK(expand_to_x(A("xi")) == X("y - r"));
    CHECK(expand_to_x(A("xi z1")) == X("y y - r y"));
}

TEST_CASE("contract_to_a") {
    CHECK(contract_to_a(X("x y")) == A("z2"));
    CHECK(contract_to_a(X("r")) == A("z1 - xi"));
    CHECK(contract_to_a(X("y r")) == A("z1 z1 - z1 xi"));
    CHECK_THROWS_AS(contract_to_a(X("y x")), NotInH1);
    CHECK_THROWS_AS(contract_to_a(X("x r")), NotInH1);
}

TEST_CASE("basis change round trips on random elements") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const AElement a = test::random_h1(rng, 6);
        const XElement x = expand_to_x(a);
        CHECK(contract_to_a(x) == a);
        CHECK(expand_to_x(contract_to_a(x)) == x);
        for (const auto& [w, c] : x.terms()) {
            // degree is preserved term-wise: each x-word comes from an a-word of the same degree
            bool found = false;
            for (const auto& [aw, ac] : a.terms()) {
                found = found || aw.degree() == w.degree();
            }
            CHECK(found);
        }
    }
}

TEST_CASE("block-built x-elements contract and expand back") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> block(0, 3), len(0, 4);
    for (int i = 0; i < 100; ++i) {
        XWord w;
        const int n = len(rng);
        for (int b = 0; b < n; ++b) {
            const int kind = block(rng);
            if (kind == 0) {
                w.push_back(XLetter::rho);
            } else {
                for (int j = 1; j < kind; ++j) {
                    w.push_back(XLetter::x);
                }
                w.push_back(XLetter::y);
            }
        }
        const XElement x(w, HPoly::parse("2 - h"));
        CHECK(expand_to_x(contract_to_a(x)) == x);
    }
}

TEST_CASE("monomial weight") {
    CHECK(weight(Monomial{0, AWord{ALetter::z(3), ALetter::z(1)}}) == 4);
    CHECK(weight(Monomial{2, AWord{ALetter::xi()}}) == 3);
    CHECK(weight(Monomial{5, AWord{}}) == 5);
}

TEST_CASE("membership") {
    CHECK(membership(A("xi z1"), Space::H0hat));
    CHECK_FALSE(membership(A("z1 z2"), Space::H0hat));
    CHECK(membership(A("h*z2 z1"), Space::H0));
    CHECK_FALSE(membership(A("z2 xi"), Space::H0));
    CHECK(membership(A("3"), Space::H0));
    CHECK_FALSE(membership(A("1"), Space::H0tilde));
    CHECK(membership(A("xi + z2"), Space::H0tilde));
    CHECK(membership(A("z1 xi + 1"), Space::Hge1));
    CHECK_FALSE(membership(A("z1"), Space::Hge2));
    CHECK(membership(A("0"), Space::H0tilde));
}

TEST_CASE("index conversion") {
    CHECK(index_to_word(Index{{2, 1}}) == AWord{ALetter::z(2), ALetter::z(1)});
    CHECK(index_to_word(Index{}).empty());
    CHECK(word_to_index(AWord{}) == Index{});
    CHECK_THROWS_AS(word_to_index(AWord{ALetter::xi(), ALetter::z(1)}), NotAnIndexWord);
    CHECK(Index::parse("3,1,2").to_string() == "3,1,2");
    CHECK(Index::parse("").parts.empty());
    CHECK(Index{{2, 1}}.admissible());
    CHECK_FALSE(Index{{1, 2}}.admissible());
    CHECK(Index{{2, 1}}.weight() == 3);
}

TEST_CASE("index order") {
    CHECK(Index{} < Index{{2}});
    CHECK(Index{{2}} < Index{{2, 1}});
    CHECK(Index{{2, 1}} < Index{{3}});
    CHECK(Index{{3}} < Index{{2, 1, 1}});
}

TEST_CASE("parsing and printing") {
    const AElement e = A("z2 z1 + h*xi");
    CHECK(e.coefficient(AWord{ALetter::z(2), ALetter::z(1)}) == HPoly(1));
    CHECK(e.coefficient(AWord{ALetter::xi()}) == HPoly::hbar());
    const auto x = parse_element("x y r");
    REQUIRE(std::holds_alternative<XElement>(x));
    CHECK(std::get<XElement>(x) == XElement(XWord{XLetter::x, XLetter::y, XLetter::rho}));
    CHECK_THROWS_AS(parse_element("z0"), ParseError);
    CHECK_THROWS_AS(parse_element("z2 +"), ParseError);
    CHECK_THROWS_AS(parse_element("z2 * z3"), ParseError);
    CHECK_THROWS_AS(parse_element("q"), ParseError);
    CHECK(A("2*xi xi + z2 - h*xi").to_string() == "2*xi xi + z2 - h*xi");
    CHECK(A("h^2*1 - 1/2*h*z3").to_string() == "-1/2*h*z3 + h^2");
    CHECK(A("z2 - z2").to_string() == "0");
    CHECK(A("3*h*2*xi").to_string() == "6*h*xi");
}

TEST_CASE("print then parse is the identity on random elements") {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        const AElement a = test::random_h1(rng, 5);
        CHECK(parse_a_element(a.to_string()) == a);
        const XElement x = expand_to_x(a);
        CHECK(parse_x_element(x.to_string()) == x);
    }
}

TEST_CASE("admissible-start word counts") {
    const std::vector<std::size_t> expected{1, 3, 8, 21, 55, 144, 377};
    for (int m = 1; m <= 7; ++m) {
        const std::vector<AWord> words = admissible_start_words(m);
        CHECK(words.size() == expected[m - 1]);
        std::set<AWord> distinct(words.begin(), words.end());
        CHECK(distinct.size() == words.size());
        for (const AWord& w : words) {
            CHECK(w.degree() == m);
            CHECK(admissible_start(w));
        }
    }
}

TEST_CASE("graded basis") {
    const GradedBasis b2 = enumerate_basis(2);
    CHECK(b2.size() == 5);
    std::size_t h0 = 0;
    for (std::size_t i = 0; i < b2.size(); ++i) {
        h0 += b2.in_h0[i] ? 1 : 0;
    }
    CHECK(h0 == 2);
    CHECK(b2.indices() == std::vector<Index>{Index{}, Index{{2}}});
    const GradedBasis b1 = enumerate_basis(1);
    CHECK(b1.size() == 2);
    CHECK(b1.indices() == std::vector<Index>{Index{}});
    const GradedBasis b7 = enumerate_basis(7);
    CHECK(b7.indices().size() == 64);
    // H0 monomials correspond to admissible indices of weight <= d plus the empty index
    for (int d = 1; d <= 7; ++d) {
        const GradedBasis b = enumerate_basis(d);
        CHECK(b.indices() == admissible_indices(d));
        for (const Monomial& m : b.monomials) {
            CHECK(m.weight() == d);
        }
    }
}
