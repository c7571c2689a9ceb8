#include "qmzv/checks.hpp"

#include <cmath>

#include "qmzv/error.hpp"

namespace qmzv {

ProductKind parse_product_kind(const std::string& name) {
    if (name == "harmonic") {
        return ProductKind::harmonic;
    }
    if (name == "shuffle") {
        return ProductKind::shuffle;
    }
    if (name == "star") {
        return ProductKind::star;
    }
    throw ParseError("unknown product '" + name + "' (harmonic, shuffle, star)", 0);
}

AElement product(ProductKind kind, const AElement& a, const AElement& b, ProductCache& cache) {
    switch (kind) {
        case ProductKind::harmonic:
            return harmonic(a, b, cache);
        case ProductKind::shuffle:
            return shuffle(a, b, cache);
        case ProductKind::star:
            return star(a, b, cache);
    }
    throw Error("unreachable product kind");
}

Check product_theorem(ProductKind kind, const AElement& a, const AElement& b, const QContext& ctx,
                      ProductCache& cache) {
    const EvalResult za = z_q(a, ctx);
    const EvalResult zb = z_q(b, ctx);
    const EvalResult zab = z_q(product(kind, a, b, cache), ctx);
    Check c;
    c.difference = std::abs(zab.value - za.value * zb.value);
    const double tails = zab.tail_bound + std::abs(za.value) * zb.tail_bound +
                         std::abs(zb.value) * za.tail_bound + za.tail_bound * zb.tail_bound;
    const double magnitude = zab.magnitude + za.magnitude * zb.magnitude;
    c.allowance = ctx.tolerance + tails + kRoundingAllowance * magnitude;
    c.ok = c.difference <= c.allowance;
    return c;
}

Check kernel_check(const AElement& e, const QContext& ctx) {
    const EvalResult r = zbar_q(e, ctx);
    Check c;
    c.difference = std::abs(r.value);
    c.allowance = ctx.tolerance + r.tail_bound + kRoundingAllowance * r.magnitude;
    c.ok = c.difference <= c.allowance;
    return c;
}

Check compare(const EvalResult& x, const EvalResult& y, double tolerance) {
    Check c;
    c.difference = std::abs(x.value - y.value);
    c.allowance = tolerance + x.tail_bound + y.tail_bound + kRoundingAllowance * (x.magnitude + y.magnitude);
    c.ok = c.difference <= c.allowance;
    return c;
}

}  // namespace qmzv
