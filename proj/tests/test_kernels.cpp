#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "qmzv/kernels.hpp"
#include "qmzv/qeval.hpp"
#include "qmzv/relations.hpp"

using namespace qmzv;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("runtime selection") {
    const kernels::KernelTable& best = kernels::best();
    if (kernels::avx2() != nullptr) {
        CHECK(best.isa == kernels::Isa::avx2);
    } else {
        CHECK(best.isa == kernels::Isa::scalar);
    }
    CHECK(std::string(kernels::scalar().name) == "scalar");
}

TEST_CASE("vector kernels match the scalar reference bit for bit") {
    const kernels::KernelTable* vec = kernels::avx2();
    if (vec == nullptr) {
        MESSAGE("AVX2 not available; only the scalar path is exercised");
        return;
    }
    const kernels::KernelTable& ref = kernels::scalar();
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (std::size_t n : {0U, 1U, 3U, 4U, 5U, 8U, 31U, 257U}) {
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = dist(rng);
            b[i] = dist(rng) + 3.0;
        }
        std::vector<double> r1(n), r2(n);
        ref.multiply(a.data(), b.data(), r1.data(), n);
        vec->multiply(a.data(), b.data(), r2.data(), n);
        CHECK(bitwise_equal(r1, r2));
        ref.divide(a.data(), b.data(), r1.data(), n);
        vec->divide(a.data(), b.data(), r2.data(), n);
        CHECK(bitwise_equal(r1, r2));
        ref.one_minus_div(a.data(), 0.37, r1.data(), n);
        vec->one_minus_div(a.data(), 0.37, r2.data(), n);
        CHECK(bitwise_equal(r1, r2));
        for (unsigned p : {0U, 1U, 2U, 5U, 13U}) {
            ref.power(a.data(), p, r1.data(), n);
            vec->power(a.data(), p, r2.data(), n);
            CHECK(bitwise_equal(r1, r2));
        }
    }
}

TEST_CASE("full evaluations agree bit for bit across kernel tables") {
    const kernels::KernelTable* vec = kernels::avx2();
    if (vec == nullptr) {
        return;
    }
    for (double q : {0.5, 1.0 / 3.0, 0.9}) {
        QContext a = QContext::real(q);
        a.kernels = &kernels::scalar();
        QContext b = a;
        b.kernels = vec;
        for (int d = 2; d <= 4; ++d) {
            for (const AWord& w : admissible_start_words(d)) {
                const EvalResult ra = z_q(AElement(w), a);
                const EvalResult rb = z_q(AElement(w), b);
                CHECK(same_bits(ra.value, rb.value));
                CHECK(ra.truncation == rb.truncation);
                CHECK(same_bits(l_value(AElement(w), 0.3, a).value, l_value(AElement(w), 0.3, b).value));
            }
        }
    }
}

TEST_CASE("span wrappers") {
    std::vector<double> a{1, 2, 3, 4, 5}, b{2, 2, 2, 2, 2}, out(5);
    kernels::multiply(a, b, out);
    CHECK(out == std::vector<double>{2, 4, 6, 8, 10});
    kernels::power(a, 2, out);
    CHECK(out == std::vector<double>{1, 4, 9, 16, 25});
    kernels::divide(a, b, out);
    CHECK(out[4] == 2.5);
    kernels::one_minus_div(a, 2.0, out);
    CHECK(out[2] == -1.0);
}
