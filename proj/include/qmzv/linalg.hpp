#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qmzv/rational.hpp"

namespace qmzv {

using RationalRow = std::vector<Rational>;
// (column, value) pairs with strictly increasing columns and no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct RrefResult {
    std::vector<RationalRow> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
};

// Reduced row-echelon form over Q by Gauss-Jordan elimination. Pivots are
// normalized to 1 and strictly increase; zero rows are dropped.
RrefResult rref(const std::vector<RationalRow>& rows, std::size_t columns);

// Incremental row-echelon form over Z. Each stored row is primitive with a
// positive leading entry, and its leading column is a pivot no other stored
// row starts at. Rows are kept sparse; the working row is dense.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return pivots_.size(); }

    // Adds a row; returns true when it was independent of the stored rows.
    bool insert(const SparseRow& row);
    // True when the row lies in the span of the stored rows.
    bool reduces_to_zero(const SparseRow& row) const;

    // Stored rows whose pivot column is >= first_column, as rationals, in pivot order.
    std::vector<RationalRow> rows_from(std::size_t first_column) const;

private:
    using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

    // Reduces dense in place; returns the first nonzero column or columns_.
    std::size_t reduce(std::vector<mpz_class>& dense) const;
    std::vector<mpz_class> densify(const SparseRow& row) const;

    std::size_t columns_;
    std::map<std::size_t, IntRow> pivots_;
};

}  // namespace qmzv
