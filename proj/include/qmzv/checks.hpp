#pragma once

#include <string>

#include "qmzv/products.hpp"
#include "qmzv/qeval.hpp"

namespace qmzv {

// Outcome of a numeric identity check: |difference| <= allowance, where the
// allowance is tolerance + propagated tail bounds + a rounding term.
struct Check {
    double difference = 0.0;
    double allowance = 0.0;
    bool ok = true;
};

enum class ProductKind { harmonic, shuffle, star };

ProductKind parse_product_kind(const std::string& name);
AElement product(ProductKind kind, const AElement& a, const AElement& b, ProductCache& cache);

// Relative rounding allowance applied to the magnitude of evaluated terms.
inline constexpr double kRoundingAllowance = 1e-12;

// Z_q(a * b) = Z_q(a) Z_q(b) for the harmonic or shuffle product.
Check product_theorem(ProductKind kind, const AElement& a, const AElement& b, const QContext& ctx,
                      ProductCache& cache);

// zbar_q(e) = 0.
Check kernel_check(const AElement& e, const QContext& ctx);

// |x - y| against tolerance + tails + rounding.
Check compare(const EvalResult& x, const EvalResult& y, double tolerance);

}  // namespace qmzv
