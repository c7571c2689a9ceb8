// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace qmzv::kernels::detail {

void multiply_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(va, vb));
    }
    multiply_scalar(a + i, b + i, out + i, n - i);
}

void divide_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(out + i, _mm256_div_pd(va, vb));
    }
    divide_scalar(a + i, b + i, out + i, n - i);
}

void one_minus_div_avx2(const double* a, double d, double* out, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d vd = _mm256_set1_pd(d);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_sub_pd(one, va), vd));
    }
    one_minus_div_scalar(a + i, d, out + i, n - i);
}

void power_avx2(const double* base, unsigned p, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d result = _mm256_set1_pd(1.0);
        __m256d b = _mm256_loadu_pd(base + i);
        unsigned e = p;
        while (e != 0) {
            if (e & 1U) {
                result = _mm256_mul_pd(result, b);
            }
            e >>= 1U;
            if (e != 0) {
                b = _mm256_mul_pd(b, b);
            }
        }
        _mm256_storeu_pd(out + i, result);
    }
    power_scalar(base + i, p, out + i, n - i);
}

}  // namespace qmzv::kernels::detail
