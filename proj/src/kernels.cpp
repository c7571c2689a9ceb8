#include "qmzv/kernels.hpp"

#include <cassert>

#include "kernels_impl.hpp"

namespace qmzv::kernels {

namespace {

constexpr KernelTable kScalar{
    Isa::scalar, "scalar", detail::multiply_scalar, detail::divide_scalar,
    detail::one_minus_div_scalar, detail::power_scalar,
};

#if defined(QMZV_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{
    Isa::avx2, "avx2", detail::multiply_avx2, detail::divide_avx2,
    detail::one_minus_div_avx2, detail::power_avx2,
};

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
}
#endif

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
#if defined(QMZV_HAVE_AVX2_KERNELS)
    static const bool available = cpu_has_avx2();
    return available ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& best() {
    static const KernelTable& table = avx2() != nullptr ? *avx2() : scalar();
    return table;
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    assert(a.size() == out.size() && b.size() == out.size());
    best().multiply(a.data(), b.data(), out.data(), out.size());
}

void divide(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    assert(a.size() == out.size() && b.size() == out.size());
    best().divide(a.data(), b.data(), out.data(), out.size());
}

void one_minus_div(std::span<const double> a, double d, std::span<double> out) {
    assert(a.size() == out.size());
    best().one_minus_div(a.data(), d, out.data(), out.size());
}

void power(std::span<const double> base, unsigned p, std::span<double> out) {
    assert(base.size() == out.size());
    best().power(base.data(), p, out.data(), out.size());
}

}  // namespace qmzv::kernels
