#pragma once

#include <cstddef>
#include <span>

namespace qmzv::kernels {

enum class Isa { scalar, avx2 };

// Element-wise double kernels used by the q-series evaluator.
//
// Every variant performs the same IEEE operations in the same order per
// element, so all variants are bitwise identical to the scalar reference.
// Reductions (prefix sums, totals) stay in the caller and run in ascending
// index order.
struct KernelTable {
    Isa isa;
    const char* name;
    // out[i] = a[i] * b[i]
    void (*multiply)(const double* a, const double* b, double* out, std::size_t n);
    // out[i] = a[i] / b[i]
    void (*divide)(const double* a, const double* b, double* out, std::size_t n);
    // out[i] = (1 - a[i]) / d
    void (*one_minus_div)(const double* a, double d, double* out, std::size_t n);
    // out[i] = base[i]^p by binary exponentiation (square-and-multiply from the low bit)
    void (*power)(const double* base, unsigned p, double* out, std::size_t n);
};

const KernelTable& scalar();
// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* avx2();
// Best table for this CPU; selected once on first use.
const KernelTable& best();

// Span front-ends dispatching to best().
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void divide(std::span<const double> a, std::span<const double> b, std::span<double> out);
void one_minus_div(std::span<const double> a, double d, std::span<double> out);
void power(std::span<const double> base, unsigned p, std::span<double> out);

}  // namespace qmzv::kernels
