#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qmzv/algebra.hpp"
#include "qmzv/relations.hpp"

namespace qmzv::test {

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return Rational(num(rng), den(rng));
}

inline HPoly random_hpoly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> cs;
    const int d = deg(rng);
    for (int j = 0; j <= d; ++j) {
        cs.push_back(random_rational(rng));
    }
    return HPoly(cs);
}

inline AWord random_word(std::mt19937& rng, int degree, bool admissible_first) {
    if (admissible_first) {
        const std::vector<AWord> words = admissible_start_words(degree);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        return words[pick(rng)];
    }
    AWord w;
    std::uniform_int_distribution<int> letter(0, 3);
    while (w.degree() < degree) {
        const int l = letter(rng);
        const int k = std::min(l, degree - w.degree());
        w.push_back(k == 0 ? ALetter::xi() : ALetter::z(k));
    }
    return w;
}

// Every word of exactly the given degree.
inline std::vector<AWord> all_words(int degree) {
    if (degree == 0) {
        return {AWord{}};
    }
    std::vector<AWord> out;
    for (int k = 0; k <= degree; ++k) {
        const ALetter u = k == 0 ? ALetter::xi() : ALetter::z(k);
        for (const AWord& rest : all_words(degree - u.degree())) {
            out.push_back(AWord{u} + rest);
        }
    }
    return out;
}

// Random element of H0hat whose terms have total weight at most max_weight.
inline AElement random_h0hat(std::mt19937& rng, int max_weight, int max_terms = 3) {
    std::uniform_int_distribution<int> terms(1, max_terms), weight(0, max_weight);
    AElement e;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        const int total = weight(rng);
        std::uniform_int_distribution<int> hbar(0, total);
        const int j = total == 0 ? 0 : hbar(rng);
        const int deg = total - j;
        const AWord w = deg == 0 ? AWord{} : random_word(rng, deg, true);
        e.add(w, HPoly::monomial(random_rational(rng), j));
    }
    return e;
}

// Random element of H^1 with terms of degree at most max_degree.
inline AElement random_h1(std::mt19937& rng, int max_degree, int max_terms = 3) {
    std::uniform_int_distribution<int> terms(1, max_terms), degree(0, max_degree);
    AElement e;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        const int deg = degree(rng);
        e.add(deg == 0 ? AWord{} : random_word(rng, deg, false), random_hpoly(rng, 2));
    }
    return e;
}

// Direct nested enumeration of sum_{N > n_1 > ... > n_r > 0} prod I_{u_i}(n_i).
inline double brute_force_partial(const AWord& w, int N, double q) {
    auto I = [q](ALetter u, int n) {
        const double qint = (1.0 - std::pow(q, n)) / (1.0 - q);
        return u.is_xi() ? std::pow(q, n) / qint : std::pow(q, (u.k() - 1) * n) / std::pow(qint, u.k());
    };
    double total = 0.0;
    std::vector<int> n(w.size());
    // Recursive enumeration without the DP recursion.
    auto rec = [&](auto&& self, std::size_t i, int upper, double prod) -> void {
        if (i == w.size()) {
            total += prod;
            return;
        }
        for (int m = upper - 1; m >= 1; --m) {
            self(self, i + 1, m, prod * I(w[i], m));
        }
    };
    rec(rec, 0, N, 1.0);
    return total;
}

}  // namespace qmzv::test
