#include "qmzv/relations.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qmzv/error.hpp"
#include "qmzv/products.hpp"

namespace qmzv {

namespace {

// All words of the given degree, optionally restricted to admissible starts.
void words_of_degree(int degree, bool admissible_first, AWord& prefix, std::vector<AWord>& out) {
    if (degree == 0) {
        out.push_back(prefix);
        return;
    }
    const bool first = prefix.empty();
    auto extend = [&](ALetter u) {
        prefix.push_back(u);
        words_of_degree(degree - u.degree(), admissible_first, prefix, out);
        prefix = prefix.prefix(prefix.size() - 1);
    };
    extend(ALetter::xi());
    for (int k = 1; k <= degree; ++k) {
        if (k == 1 && first && admissible_first) {
            continue;
        }
        extend(ALetter::z(k));
    }
}

void compositions(int remaining, std::vector<int>& parts, std::vector<Index>& out) {
    if (remaining == 0) {
        out.push_back(Index{parts});
        return;
    }
    for (int k = 1; k <= remaining; ++k) {
        if (parts.empty() && k < 2) {
            continue;
        }
        parts.push_back(k);
        compositions(remaining - k, parts, out);
        parts.pop_back();
    }
}

using Shape = std::vector<std::pair<int, int>>;  // (alpha_i, beta_i)

void shapes(int remaining, Shape& current, std::vector<Shape>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int m = 1; m <= remaining; ++m) {
        for (int a = 0; a < m; ++a) {
            current.emplace_back(a, m - 1 - a);
            shapes(remaining - m, current, out);
            current.pop_back();
        }
    }
}

Shape dual(const Shape& s) {
    Shape d;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        d.emplace_back(it->second, it->first);
    }
    return d;
}

AElement shape_element(const Shape& s) {
    AElement e = AElement::one();
    for (const auto& [a, b] : s) {
        e = e * phi(a + 1) * rho_power(b);
    }
    return e;
}

std::string shape_tag(const Shape& s) {
    std::string out = "resum:";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += std::to_string(s[i].first) + ',' + std::to_string(s[i].second);
    }
    return out;
}

std::vector<Generator> resummation_base(int d) {
    std::vector<Shape> all;
    Shape current;
    shapes(d, current, all);
    std::vector<Generator> out;
    for (const Shape& s : all) {
        const Shape t = dual(s);
        // The dual shape gives the negated generator; keep one of each pair.
        if (!(s < t)) {
            continue;
        }
        AElement e = shape_element(s) - shape_element(t);
        if (!e.is_zero()) {
            out.push_back({std::move(e), shape_tag(s)});
        }
    }
    return out;
}

std::string hbar_tag(int j) { return j == 0 ? std::string() : "|h^" + std::to_string(j); }

}  // namespace

std::vector<AWord> admissible_start_words(int degree) {
    std::vector<AWord> out;
    if (degree <= 0) {
        return out;
    }
    AWord prefix;
    words_of_degree(degree, true, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Index> admissible_indices(int max_weight) {
    std::vector<Index> out{Index{}};
    for (int w = 2; w <= max_weight; ++w) {
        std::vector<int> parts;
        compositions(w, parts, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Index> GradedBasis::indices() const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (in_h0[i]) {
            out.push_back(word_to_index(monomials[i].word));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GradedBasis enumerate_basis(int d) {
    if (d < 0) {
        throw DomainError("enumerate_basis needs d >= 0");
    }
    GradedBasis basis;
    basis.weight = d;
    basis.monomials.push_back(Monomial{d, AWord{}});
    for (int j = 0; j < d; ++j) {
        for (AWord& w : admissible_start_words(d - j)) {
            basis.monomials.push_back(Monomial{j, std::move(w)});
        }
    }
    std::sort(basis.monomials.begin(), basis.monomials.end());
    for (const Monomial& m : basis.monomials) {
        basis.in_h0.push_back(word_in(m.word, Space::H0));
    }
    return basis;
}

std::vector<Generator> gen_double_shuffle(int d, ProductCache* cache) {
    ProductCache local;
    ProductCache& c = cache != nullptr ? *cache : local;
    std::vector<Generator> out;
    for (int s = 2; s <= d; ++s) {
        const HPoly lift = HPoly::hbar(d - s);
        for (int a = 1; 2 * a <= s; ++a) {
            const std::vector<AWord> left = admissible_start_words(a);
            const std::vector<AWord> right = admissible_start_words(s - a);
            for (const AWord& p : left) {
                for (const AWord& r : right) {
                    if (a == s - a && r < p) {
                        continue;
                    }
                    const AElement ep(p), er(r);
                    AElement e = (harmonic(ep, er, c) - shuffle(ep, er, c)) * lift;
                    if (!e.is_zero()) {
                        out.push_back({std::move(e), "ds:" + p.to_string() + '|' + r.to_string() + hbar_tag(d - s)});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Generator> gen_resummation(int d, bool hbar_lifts) {
    std::vector<Generator> out = resummation_base(d);
    if (hbar_lifts) {
        for (int j = 1; j < d; ++j) {
            for (Generator& g : resummation_base(d - j)) {
                g.element *= HPoly::hbar(j);
                g.provenance += hbar_tag(j);
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

AElement gen_hoffman(const Index& k) {
    if (k.parts.empty() || !k.admissible()) {
        throw NotAdmissible("Hoffman's identity needs a non-empty admissible index, got '" + k.to_string() + "'");
    }
    AElement e;
    const std::size_t r = k.parts.size();
    for (std::size_t i = 0; i < r; ++i) {
        Index lhs = k;
        ++lhs.parts[i];
        e += AElement(index_to_word(lhs));
        for (int a = 0; a <= k.parts[i] - 2; ++a) {
            Index rhs;
            rhs.parts.assign(k.parts.begin(), k.parts.begin() + static_cast<long>(i));
            rhs.parts.push_back(k.parts[i] - a);
            rhs.parts.push_back(a + 1);
            rhs.parts.insert(rhs.parts.end(), k.parts.begin() + static_cast<long>(i) + 1, k.parts.end());
            e -= AElement(index_to_word(rhs));
        }
    }
    return e;
}

AElement index_monomial(const Index& k, int d) {
    return AElement(index_to_word(k), HPoly::hbar(d - k.weight()));
}

AElement RelationBasis::row_element(std::size_t i) const {
    AElement e;
    const RationalRow& row = rows.at(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero()) {
            e.add_scaled(index_monomial(index_basis[j], weight), HPoly(row[j]));
        }
    }
    return e;
}

RelationBasis intersect_with_h0(const std::vector<Generator>& generators, int d) {
    const GradedBasis basis = enumerate_basis(d);
    const std::vector<Index> indices = basis.indices();

    // Columns: non-H0 monomials in canonical order, then H0 monomials by index.
    std::map<Monomial, std::size_t> column;
    std::size_t next = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis.in_h0[i]) {
            column.emplace(basis.monomials[i], next++);
        }
    }
    const std::size_t first_h0 = next;
    for (const Index& k : indices) {
        column.emplace(Monomial{d - k.weight(), index_to_word(k)}, next++);
    }

    std::vector<std::pair<SparseRow, const Generator*>> rows;
    rows.reserve(generators.size());
    for (const Generator& g : generators) {
        SparseRow row;
        for (const auto& [w, c] : g.element.terms()) {
            const auto& cs = c.coefficients();
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (cs[j].is_zero()) {
                    continue;
                }
                const Monomial m{static_cast<int>(j), w};
                if (m.weight() != d) {
                    throw NotHomogeneous("generator '" + g.provenance + "' is not of weight " + std::to_string(d));
                }
                auto it = column.find(m);
                if (it == column.end()) {
                    throw DomainError("generator '" + g.provenance + "' leaves H0hat");
                }
                row.emplace_back(it->second, cs[j]);
            }
        }
        std::sort(row.begin(), row.end());
        if (!row.empty()) {
            rows.emplace_back(std::move(row), &g);
        }
    }
    // Canonical order makes the result independent of how generators were assembled.
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) {
            return a.first < b.first;
        }
        return a.second->provenance < b.second->provenance;
    });

    RelationBasis out;
    out.weight = d;
    out.index_basis = indices;
    EchelonBuilder echelon(next);
    for (const auto& [row, g] : rows) {
        if (echelon.insert(row)) {
            out.provenance.push_back(g->provenance);
        }
    }
    std::vector<RationalRow> h0_rows;
    for (RationalRow& r : echelon.rows_from(first_h0)) {
        h0_rows.emplace_back(r.begin() + static_cast<long>(first_h0), r.end());
    }
    out.rows = rref(h0_rows, indices.size()).rows;
    return out;
}

RelationBasis relation_basis(int d, bool hbar_lifts, const ProgressFn& progress) {
    if (d < 1) {
        throw DomainError("relation_basis needs d >= 1");
    }
    std::vector<Generator> gens;
    if (d >= 2) {
        gens = gen_double_shuffle(d);
    }
    if (progress) {
        progress("weight " + std::to_string(d) + ": " + std::to_string(gens.size()) + " double shuffle generators");
    }
    std::vector<Generator> resum = gen_resummation(d, hbar_lifts);
    if (progress) {
        progress("weight " + std::to_string(d) + ": " + std::to_string(resum.size()) + " resummation generators");
    }
    gens.insert(gens.end(), std::make_move_iterator(resum.begin()), std::make_move_iterator(resum.end()));
    RelationBasis basis = intersect_with_h0(gens, d);
    basis.hbar_lifts = hbar_lifts;
    if (progress) {
        progress("weight " + std::to_string(d) + ": rank " + std::to_string(basis.provenance.size()) +
                 ", dim N = " + std::to_string(basis.dimension()));
    }
    return basis;
}

std::vector<DimsRow> dims_table(int max_d, bool hbar_lifts, const ProgressFn& progress) {
    std::vector<DimsRow> table;
    for (int d = 2; d <= max_d; ++d) {
        DimsRow row;
        row.weight = d;
        row.indices = admissible_indices(d).size() - 1;
        row.dimension = relation_basis(d, hbar_lifts, progress).dimension();
        table.push_back(row);
    }
    return table;
}

bool NumericReport::ok() const { return !first_failure().has_value(); }

std::optional<std::size_t> NumericReport::first_failure() const {
    for (const RowCheck& r : rows) {
        if (!r.ok) {
            return r.row;
        }
    }
    return std::nullopt;
}

NumericReport verify_numeric(const RelationBasis& basis, const QContext& ctx) {
    NumericReport report;
    if (basis.rows.empty()) {
        return report;
    }
    // zbar_q of every index once; rows combine them.
    std::vector<EvalResult> values;
    values.reserve(basis.index_basis.size());
    for (const Index& k : basis.index_basis) {
        values.push_back(zbar_q(index_monomial(k, basis.weight), ctx));
    }
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const RationalRow& row = basis.rows[i];
        if (row.size() != values.size()) {
            throw Error("relation row " + std::to_string(i) + " has the wrong length");
        }
        RowCheck check;
        check.row = i;
        double magnitude = 0.0;
        double tails = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) {
                continue;
            }
            const double c = row[j].to_double();
            check.value += c * values[j].value;
            magnitude += std::abs(c * values[j].value);
            tails += std::abs(c) * values[j].tail_bound;
        }
        check.allowance = ctx.tolerance + tails + 1e-12 * magnitude;
        check.ok = std::abs(check.value) <= check.allowance;
        report.max_abs = std::max(report.max_abs, std::abs(check.value));
        report.rows.push_back(check);
    }
    return report;
}

}  // namespace qmzv
