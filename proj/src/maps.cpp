#include "qmzv/error.hpp"
#include "qmzv/products.hpp"

namespace qmzv {

namespace {

template <class F>
AElement apply_linear(const AElement& e, F&& on_word) {
    AElement out;
    for (const auto& [w, c] : e.terms()) {
        out.add_scaled(on_word(w), c);
    }
    return out;
}

// (-1)^n h^n as a polynomial, or h^n when sign > 0.
HPoly signed_hbar(int n, int sign) {
    return HPoly::monomial(Rational((sign < 0 && n % 2 == 1) ? -1 : 1), n);
}

AElement single(ALetter l, const HPoly& c, const AWord& tail) {
    AWord w{l};
    return AElement(w + tail, c);
}

[[noreturn]] void domain_error(const char* map, const AWord& w) {
    throw DomainError(std::string(map) + " is not defined on '" + w.to_string() + "'");
}

// e and e_inv share one formula up to the sign of h.
AElement e_map_signed(const AElement& e, int sign, const char* name) {
    return apply_linear(e, [&](const AWord& w) {
        if (w.empty() || w.front().is_xi()) {
            return AElement(w);
        }
        const int k = w.front().k();
        if (k < 2) {
            domain_error(name, w);
        }
        const AWord tail = w.suffix(1);
        AElement out;
        for (int a = 2; a <= k; ++a) {
            out += single(ALetter::z(a), signed_hbar(k - a, sign) * binomial(k - 2, a - 2), tail);
        }
        return out;
    });
}

}  // namespace

AElement delta0(const AElement& e) {
    return apply_linear(e, [](const AWord& w) {
        if (w.empty()) {
            return AElement{};
        }
        if (w.front().is_xi() || w.front().k() < 2) {
            domain_error("delta0", w);
        }
        const int k = w.front().k();
        const AWord tail = w.suffix(1);
        return k == 2 ? AElement(AWord{ALetter::xi()} + tail) : AElement(AWord{ALetter::z(k - 1)} + tail);
    });
}

AElement delta1(const AElement& e) {
    return apply_linear(e, [](const AWord& w) {
        if (w.empty()) {
            return AElement::one();
        }
        if (w.front().is_xi()) {
            domain_error("delta1", w);
        }
        const int k = w.front().k();
        const AWord tail = w.suffix(1);
        AElement out;
        for (int a = 2; a <= k; ++a) {
            out += single(ALetter::z(a), signed_hbar(k - a, -1) * binomial(k - 1, a - 1), tail);
        }
        out += single(ALetter::xi(), signed_hbar(k - 1, -1), tail);
        return out;
    });
}

AElement i0(const AElement& e) {
    return apply_linear(e, [](const AWord& w) {
        if (w.empty() || (!w.front().is_xi() && w.front().k() < 2)) {
            domain_error("i0", w);
        }
        const AWord tail = w.suffix(1);
        const int k = w.front().is_xi() ? 1 : w.front().k();
        return AElement(AWord{ALetter::z(k + 1)} + tail);
    });
}

AElement i1(const AElement& e) {
    return apply_linear(e, [](const AWord& w) {
        if (w.empty()) {
            return AElement::one();
        }
        const AWord tail = w.suffix(1);
        if (w.front().is_xi()) {
            return AElement(AWord{ALetter::z(1)} + tail);
        }
        const int k = w.front().k();
        if (k < 2) {
            domain_error("i1", w);
        }
        // The trailing w is applied to every summand; without it delta1 o i1 would not be the identity.
        AElement out;
        for (int a = 1; a <= k; ++a) {
            out += single(ALetter::z(a), signed_hbar(k - a, 1) * binomial(k - 1, a - 1), tail);
        }
        return out;
    });
}

AElement e_map(const AElement& e) { return e_map_signed(e, 1, "e"); }

AElement e_inv(const AElement& e) { return e_map_signed(e, -1, "e_inv"); }

AElement phi(int k) {
    if (k < 1) {
        throw DomainError("phi_k requires k >= 1");
    }
    AElement out;
    for (int a = 2; a <= k; ++a) {
        out.add(AWord{ALetter::z(a)}, signed_hbar(k - a, -1));
    }
    out.add(AWord{ALetter::xi()}, signed_hbar(k - 1, -1));
    return out;
}

AElement xi_rho(int r, const AElement& w) { return AElement(AWord{ALetter::xi()}) * rho_power(r) * w; }

AElement Decomposition::recompose() const {
    AElement out = hge2;
    for (const auto& [r, w] : xi_rho) {
        out += qmzv::xi_rho(r, w);
    }
    return out;
}

Decomposition decompose(const AElement& e) {
    Decomposition d;
    for (const auto& [w, c] : e.terms()) {
        if (w.empty() || (!w.front().is_xi() && w.front().k() >= 2)) {
            d.hge2.add(w, c);
            continue;
        }
        if (!w.front().is_xi()) {
            throw DomainError("'" + w.to_string() + "' is not in H0hat");
        }
        // xi xi^m u with u empty or starting with some z_k:
        //   = sum_{j<m} (-1)^j xi rho^j z_1 xi^{m-1-j} u + (-1)^m xi rho^m u,
        // using xi = z_1 - rho after the leading letter.
        std::size_t m = 0;
        while (1 + m < w.size() && w[1 + m].is_xi()) {
            ++m;
        }
        const AWord u = w.suffix(1 + m);
        for (std::size_t j = 0; j < m; ++j) {
            AWord comp{ALetter::z(1)};
            for (std::size_t i = 0; i + 1 + j < m; ++i) {
                comp.push_back(ALetter::xi());
            }
            d.xi_rho[static_cast<int>(j)].add(comp + u, j % 2 == 0 ? c : -c);
        }
        d.xi_rho[static_cast<int>(m)].add(u, m % 2 == 0 ? c : -c);
    }
    for (auto it = d.xi_rho.begin(); it != d.xi_rho.end();) {
        it = it->second.is_zero() ? d.xi_rho.erase(it) : std::next(it);
    }
    return d;
}

}  // namespace qmzv
