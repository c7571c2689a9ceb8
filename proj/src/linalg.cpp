#include "qmzv/linalg.hpp"

#include <stdexcept>

namespace qmzv {

RrefResult rref(const std::vector<RationalRow>& rows, std::size_t columns) {
    std::vector<RationalRow> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != columns) {
            throw std::invalid_argument("rref: row length mismatch");
        }
        m.push_back(r);
    }
    RrefResult out;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < columns && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c].is_zero()) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[rank], m[p]);
        const Rational inv = m[rank][c].inverse();
        for (std::size_t j = c; j < columns; ++j) {
            m[rank][j] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c].is_zero()) {
                continue;
            }
            const Rational f = m[i][c];
            for (std::size_t j = c; j < columns; ++j) {
                if (!m[rank][j].is_zero()) {
                    m[i][j] -= f * m[rank][j];
                }
            }
        }
        out.pivots.push_back(c);
        ++rank;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

std::vector<mpz_class> EchelonBuilder::densify(const SparseRow& row) const {
    // Clear denominators so the working row is integral.
    mpz_class lcm = 1;
    for (const auto& [c, v] : row) {
        if (c >= columns_) {
            throw std::invalid_argument("EchelonBuilder: column out of range");
        }
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.raw().get_den_mpz_t());
    }
    std::vector<mpz_class> dense(columns_);
    for (const auto& [c, v] : row) {
        dense[c] = v.raw().get_num() * (lcm / v.raw().get_den());
    }
    return dense;
}

namespace {

void make_primitive(std::vector<mpz_class>& dense, std::size_t from) {
    mpz_class g = 0;
    for (std::size_t j = from; j < dense.size(); ++j) {
        if (dense[j] != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dense[j].get_mpz_t());
            if (g == 1) {
                return;
            }
        }
    }
    if (g > 1) {
        for (std::size_t j = from; j < dense.size(); ++j) {
            if (dense[j] != 0) {
                mpz_divexact(dense[j].get_mpz_t(), dense[j].get_mpz_t(), g.get_mpz_t());
            }
        }
    }
}

}  // namespace

std::size_t EchelonBuilder::reduce(std::vector<mpz_class>& dense) const {
    mpz_class g, a, b;
    for (std::size_t c = 0; c < columns_; ++c) {
        if (dense[c] == 0) {
            continue;
        }
        auto it = pivots_.find(c);
        if (it == pivots_.end()) {
            return c;
        }
        // dense = a*dense - b*pivot with a = lead/g, b = dense[c]/g.
        const IntRow& pivot = it->second;
        const mpz_class& lead = pivot.front().second;
        mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), dense[c].get_mpz_t());
        mpz_divexact(a.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), dense[c].get_mpz_t(), g.get_mpz_t());
        const bool scaled = a != 1;
        if (scaled) {
            for (std::size_t j = c; j < columns_; ++j) {
                if (dense[j] != 0) {
                    dense[j] *= a;
                }
            }
        }
        for (const auto& [j, v] : pivot) {
            mpz_submul(dense[j].get_mpz_t(), b.get_mpz_t(), v.get_mpz_t());
        }
        if (scaled) {
            make_primitive(dense, c);
        }
    }
    return columns_;
}

bool EchelonBuilder::insert(const SparseRow& row) {
    std::vector<mpz_class> dense = densify(row);
    const std::size_t lead = reduce(dense);
    if (lead == columns_) {
        return false;
    }
    make_primitive(dense, lead);
    if (dense[lead] < 0) {
        for (std::size_t j = lead; j < columns_; ++j) {
            dense[j] = -dense[j];
        }
    }
    IntRow stored;
    for (std::size_t j = lead; j < columns_; ++j) {
        if (dense[j] != 0) {
            stored.emplace_back(j, std::move(dense[j]));
        }
    }
    pivots_.emplace(lead, std::move(stored));
    return true;
}

bool EchelonBuilder::reduces_to_zero(const SparseRow& row) const {
    std::vector<mpz_class> dense = densify(row);
    return reduce(dense) == columns_;
}

std::vector<RationalRow> EchelonBuilder::rows_from(std::size_t first_column) const {
    std::vector<RationalRow> out;
    for (auto it = pivots_.lower_bound(first_column); it != pivots_.end(); ++it) {
        RationalRow r(columns_);
        for (const auto& [j, v] : it->second) {
            r[j] = Rational(mpq_class(v));
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace qmzv
