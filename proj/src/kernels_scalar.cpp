#include "kernels_impl.hpp"

namespace qmzv::kernels::detail {

void multiply_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] * b[i];
    }
}

void divide_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] / b[i];
    }
}

void one_minus_div_scalar(const double* a, double d, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (1.0 - a[i]) / d;
    }
}

void power_scalar(const double* base, unsigned p, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double result = 1.0;
        double b = base[i];
        unsigned e = p;
        while (e != 0) {
            if (e & 1U) {
                result *= b;
            }
            e >>= 1U;
            if (e != 0) {
                b *= b;
            }
        }
        out[i] = result;
    }
}

}  // namespace qmzv::kernels::detail
