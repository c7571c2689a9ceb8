#pragma once

#include <complex>
#include <optional>
#include <variant>

#include "qmzv/algebra.hpp"
#include "qmzv/kernels.hpp"

namespace qmzv {

enum class EvalMode { floating, exact };

// Evaluation parameters. q is given either as a rational (always usable in
// exact mode), a real double, or a complex number with 0 < |q| < 1.
struct QContext {
    std::variant<Rational, double, std::complex<double>> q = Rational(1, 2);
    // Outer truncation: partial sums run over n < truncation.
    int truncation = 300;
    double tolerance = 1e-10;
    EvalMode mode = EvalMode::floating;
    // When set, the truncation grows until the tail bound is below tolerance / 10.
    bool adaptive = true;
    // Kernel table for the element-wise loops; nullptr selects kernels::best().
    const kernels::KernelTable* kernels = nullptr;

    static QContext rational(Rational q) {
        QContext c;
        c.q = std::move(q);
        return c;
    }
    static QContext real(double q) {
        QContext c;
        c.q = q;
        return c;
    }

    bool is_real() const { return !std::holds_alternative<std::complex<double>>(q); }
    double q_real() const;
    std::complex<double> q_complex() const;
    // Throws Error when |q| is not in (0, 1), truncation < 1, tolerance <= 0, or
    // exact mode is requested without a rational q.
    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    // Upper bound on |series - value| from truncation; certified for real q in (0, 1).
    double tail_bound = 0.0;
    // Truncation actually used.
    int truncation = 0;
    // Sum of |term| over the terms of the element; scale for rounding error.
    double magnitude = 0.0;
    bool certified = true;
    // Exact partial sum in exact mode.
    std::optional<Rational> exact_partial;
};

struct ComplexEvalResult {
    std::complex<double> value;
    double tail_bound = 0.0;
    int truncation = 0;
    double magnitude = 0.0;
    bool certified = false;
};

// I_u(n) with [n] = (1 - q^n)/(1 - q):
//   I_xi(n) = q^n/[n],  I_{z_k}(n) = q^{(k-1)n}/[n]^k,  I_rho(n) = 1 - q.
double i_letter(ALetter u, int n, double q);
std::complex<double> i_letter(ALetter u, int n, std::complex<double> q);
Rational i_letter(ALetter u, int n, const Rational& q);
double i_rho(int n, double q);

// F_w(N) = sum_{N > n_1 > ... > n_r > 0} prod I_{u_i}(n_i), by the recursion
// F_{uw}(N) = sum_{0 < m < N} I_u(m) F_w(m).
double f_word(const AWord& w, int N, const QContext& ctx);
Rational f_word_exact(const AWord& w, int N, const Rational& q);

// Z_q on H0hat, h acting as 1 - q. DomainError outside H0hat.
EvalResult z_q(const AElement& e, const QContext& ctx);
ComplexEvalResult z_q_complex(const AElement& e, const QContext& ctx);

// Zbar_q(w) = (1 - q)^{-d} Z_q(w) for w homogeneous of weight d.
// NotHomogeneous or DomainError.
EvalResult zbar_q(const AElement& e, const QContext& ctx);

// L_w(t) = sum_n t^n/[n]^k F_{w'}(n) for w = u w' (k = 1 when u = xi), L_1 = 1.
// Requires |t| < 1 and real q.
EvalResult l_value(const AElement& e, double t, const QContext& ctx);

struct DqReport {
    double lhs = 0.0;         // (L_w(t) - L_w(qt)) / ((1 - q) t)
    double rhs = 0.0;         // via delta0 / delta1 on the decomposition of w
    double difference = 0.0;  // |lhs - rhs|
    double tail_bound = 0.0;  // propagated truncation bound on the difference
};

// q-difference check: D_q L_w = L_{delta0 w}/t on h^{>=2} and
// D_q L_{xi rho^r w} = ((1-q)t)^r/(1-t)^{r+1} L_{delta1 w} on each xi-component.
DqReport dq_check(const AElement& w, double t, const QContext& ctx);

// Partial sum of sum_j C(k+j, j) x^j over j < terms, with a geometric tail
// bound; the series sums to (1 - x)^{-(k+1)}.
EvalResult binomial_series(int k, double x, int terms);

}  // namespace qmzv
