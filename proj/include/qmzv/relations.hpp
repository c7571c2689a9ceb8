#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmzv/algebra.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/products.hpp"
#include "qmzv/qeval.hpp"

namespace qmzv {

// Monomials of total weight d spanning the weight-d part of H0hat:
// h^j w with w an admissible-start word of degree d - j, plus h^d * 1.
struct GradedBasis {
    int weight = 0;
    std::vector<Monomial> monomials;  // canonical Monomial order
    std::vector<bool> in_h0;

    std::size_t size() const { return monomials.size(); }
    // The H0 monomials as indices, in Index order.
    std::vector<Index> indices() const;
};

GradedBasis enumerate_basis(int d);

// Admissible-start words of the given degree (xi or z_k with k >= 2 first), sorted.
std::vector<AWord> admissible_start_words(int degree);
// Admissible indices of weight <= max_weight including the empty index, in Index order.
std::vector<Index> admissible_indices(int max_weight);

struct Generator {
    AElement element;
    std::string provenance;
};

// h^j (p * r - p sh r) over unordered pairs of admissible-start words with
// deg p + deg r = d - j. Zero elements are dropped.
std::vector<Generator> gen_double_shuffle(int d, ProductCache* cache = nullptr);

// phi_{a1+1} rho^{b1} ... phi_{ar+1} rho^{br} - phi_{br+1} rho^{ar} ... phi_{b1+1} rho^{a1}
// over sum(a_i + b_i + 1) = d; with hbar_lifts also h^j times the weight d - j list.
std::vector<Generator> gen_resummation(int d, bool hbar_lifts);

// Sum_i z_{k1}..z_{ki+1}..z_{kr} - sum_{i, k_i >= 2} sum_{a=0}^{k_i-2} z_{k1}..z_{ki-a} z_{a+1}..z_{kr}.
// NotAdmissible for a non-admissible or empty index.
AElement gen_hoffman(const Index& k);

// Element of the weight-d part of H0 for an index: h^{d-|k|} z_k.
AElement index_monomial(const Index& k, int d);

struct RelationBasis {
    int weight = 0;
    bool hbar_lifts = true;
    std::vector<Index> index_basis;
    // RREF over index_basis.
    std::vector<RationalRow> rows;
    // Tags of the generators that entered the echelon form as independent rows.
    std::vector<std::string> provenance;

    std::size_t dimension() const { return rows.size(); }
    // Row as an element of the weight-d part of H0.
    AElement row_element(std::size_t i) const;

    friend bool operator==(const RelationBasis&, const RelationBasis&) = default;
};

// Progress messages, e.g. for a diagnostic stream.
using ProgressFn = std::function<void(const std::string&)>;

// H0 intersected with the span of the generators. NotHomogeneous or
// DomainError for generators outside the weight-d part of H0hat.
RelationBasis intersect_with_h0(const std::vector<Generator>& generators, int d);

// S_d + R_d intersected with H0.
RelationBasis relation_basis(int d, bool hbar_lifts, const ProgressFn& progress = {});

struct DimsRow {
    int weight = 0;
    std::size_t indices = 0;    // admissible indices with |k| <= d, empty index excluded
    std::size_t dimension = 0;  // dim N_{<=d}
    std::size_t bound() const { return indices - dimension; }
};

std::vector<DimsRow> dims_table(int max_d, bool hbar_lifts, const ProgressFn& progress = {});

struct RowCheck {
    std::size_t row = 0;
    double value = 0.0;
    double allowance = 0.0;  // tolerance + tail bound + rounding allowance
    bool ok = true;
};

struct NumericReport {
    std::vector<RowCheck> rows;
    double max_abs = 0.0;
    bool ok() const;
    std::optional<std::size_t> first_failure() const;
};

// Evaluates sum_i c_i zbar_q(k_i) for each row; real q only.
NumericReport verify_numeric(const RelationBasis& basis, const QContext& ctx);

}  // namespace qmzv
