#pragma once

#include <cstddef>

namespace qmzv::kernels::detail {

void multiply_scalar(const double* a, const double* b, double* out, std::size_t n);
void divide_scalar(const double* a, const double* b, double* out, std::size_t n);
void one_minus_div_scalar(const double* a, double d, double* out, std::size_t n);
void power_scalar(const double* base, unsigned p, double* out, std::size_t n);

#if defined(QMZV_HAVE_AVX2_KERNELS)
void multiply_avx2(const double* a, const double* b, double* out, std::size_t n);
void divide_avx2(const double* a, const double* b, double* out, std::size_t n);
void one_minus_div_avx2(const double* a, double d, double* out, std::size_t n);
void power_avx2(const double* base, unsigned p, double* out, std::size_t n);
#endif

}  // namespace qmzv::kernels::detail
