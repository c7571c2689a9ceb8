#include "qmzv/qeval.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <type_traits>
#include <vector>

#include "qmzv/error.hpp"
#include "qmzv/products.hpp"

namespace qmzv {

namespace {

constexpr int kMaxTruncation = 1 << 20;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Scalar-type-generic tables of q^n, [n] and I_u(n) for 1 <= n < N.
// Index 0 is padding so that table[n] is the value at n.
template <class T>
class LetterTables {
public:
    LetterTables(T q, int N, const kernels::KernelTable& k) : q_(q), N_(N), kernels_(k) {
        qpow_.assign(static_cast<std::size_t>(N), T(1));
        for (int n = 1; n < N; ++n) {
            qpow_[n] = qpow_[n - 1] * q;
        }
        qint_.assign(static_cast<std::size_t>(N), T(1));
        if constexpr (std::is_same_v<T, double>) {
            kernels_.one_minus_div(qpow_.data() + 1, 1.0 - q, qint_.data() + 1, static_cast<std::size_t>(N - 1));
        } else {
            for (int n = 1; n < N; ++n) {
                qint_[n] = (T(1) - qpow_[n]) / (T(1) - q);
            }
        }
    }

    int truncation() const { return N_; }

    // I_u(n) for all n.
    const std::vector<T>& letter(ALetter u) {
        auto it = letters_.find(u.code());
        if (it != letters_.end()) {
            return it->second;
        }
        std::vector<T> out;
        if (u.is_xi()) {
            out = ratio(qpow_, 1, 1);
        } else {
            out = ratio(qpow_, static_cast<unsigned>(u.k() - 1), static_cast<unsigned>(u.k()));
        }
        return letters_.emplace(u.code(), std::move(out)).first->second;
    }

    // t^n / [n]^k
    std::vector<T> polylog_weight(T t, unsigned k) const {
        std::vector<T> tpow(static_cast<std::size_t>(N_), T(1));
        for (int n = 1; n < N_; ++n) {
            tpow[n] = tpow[n - 1] * t;
        }
        return ratio(tpow, 1, k);
    }

    void multiply(const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& out) const {
        const std::size_t n = static_cast<std::size_t>(N_ - 1);
        if constexpr (std::is_same_v<T, double>) {
            kernels_.multiply(a.data() + 1, b.data() + 1, out.data() + 1, n);
        } else {
            for (std::size_t i = 1; i <= n; ++i) {
                out[i] = a[i] * b[i];
            }
        }
    }

private:
    // num[n]^p / [n]^k
    std::vector<T> ratio(const std::vector<T>& num, unsigned p, unsigned k) const {
        const std::size_t n = static_cast<std::size_t>(N_ - 1);
        std::vector<T> top(static_cast<std::size_t>(N_), T(0));
        std::vector<T> bottom(static_cast<std::size_t>(N_), T(1));
        std::vector<T> out(static_cast<std::size_t>(N_), T(0));
        if constexpr (std::is_same_v<T, double>) {
            kernels_.power(num.data() + 1, p, top.data() + 1, n);
            kernels_.power(qint_.data() + 1, k, bottom.data() + 1, n);
            kernels_.divide(top.data() + 1, bottom.data() + 1, out.data() + 1, n);
        } else {
            for (std::size_t i = 1; i <= n; ++i) {
                out[i] = std::pow(num[i], static_cast<int>(p)) / std::pow(qint_[i], static_cast<int>(k));
            }
        }
        return out;
    }

    T q_;
    int N_;
    const kernels::KernelTable& kernels_;
    std::vector<T> qpow_;
    std::vector<T> qint_;
    std::map<std::uint8_t, std::vector<T>> letters_;
};

// G(n) = F_{u_from ... u_r}(n) for 1 <= n < N, built right to left with
// exclusive prefix sums in ascending n.
template <class T>
std::vector<T> inner_sums(const AWord& w, std::size_t from, LetterTables<T>& tables) {
    const int N = tables.truncation();
    std::vector<T> g(static_cast<std::size_t>(N), T(1));
    g[0] = T(0);
    std::vector<T> h(static_cast<std::size_t>(N), T(0));
    for (std::size_t i = w.size(); i-- > from;) {
        tables.multiply(tables.letter(w[i]), g, h);
        T acc(0);
        for (int n = 1; n < N; ++n) {
            g[n] = acc;
            acc += h[n];
        }
    }
    return g;
}

template <class T>
T weighted_total(const std::vector<T>& weights, const std::vector<T>& g, const LetterTables<T>& tables) {
    std::vector<T> h(g.size(), T(0));
    tables.multiply(weights, g, h);
    T acc(0);
    for (std::size_t n = 1; n < h.size(); ++n) {
        acc += h[n];
    }
    return acc;
}

// F_w(N) for the whole word.
template <class T>
T word_partial(const AWord& w, LetterTables<T>& tables) {
    if (w.empty()) {
        return T(1);
    }
    const std::vector<T> g = inner_sums(w, 1, tables);
    return weighted_total(tables.letter(w[0]), g, tables);
}

// sup_n 1/|[n]| <= |1 - q| / (1 - |q|); equal to 1 for q in (0, 1).
double inverse_qint_bound(std::complex<double> q) {
    const double aq = std::abs(q);
    return std::max(1.0, std::abs(1.0 - q) / (1.0 - aq));
}

// Bound on sum_{n >= N} a^n C(n-1, r-1). The term ratio a n/(n-r+1) decreases in n.
double geometric_binomial_tail(double a, int r, int N) {
    if (a == 0.0) {
        return 0.0;
    }
    if (N < r) {
        return kInf;
    }
    const double rho = a * N / (N - r + 1);
    if (rho >= 1.0) {
        return kInf;
    }
    const double log_binom = std::lgamma(N) - std::lgamma(r) - std::lgamma(N - r + 1);
    return std::exp(N * std::log(a) + log_binom) / (1.0 - rho);
}

// Bound on |Z_q(w) - F_w(N)| for an admissible-start word.
double word_tail(const AWord& w, int N, std::complex<double> q) {
    if (w.empty()) {
        return 0.0;
    }
    const ALetter first = w.front();
    const int c = first.is_xi() ? 1 : first.k() - 1;
    const double m = inverse_qint_bound(q);
    return std::pow(m, w.degree()) * geometric_binomial_tail(std::pow(std::abs(q), c), static_cast<int>(w.size()), N);
}

// Bound on |L_w(t) - partial| for a word; the first letter carries t^n.
double polylog_word_tail(const AWord& w, int N, double t, std::complex<double> q) {
    if (w.empty()) {
        return 0.0;
    }
    const double m = inverse_qint_bound(q);
    return std::pow(m, w.degree()) * geometric_binomial_tail(std::abs(t), static_cast<int>(w.size()), N);
}

// Sum over terms of |coefficient(h = 1 - q)| * (1 - q)^{-shift(word)} * tail(word).
template <class Tail, class Shift>
double element_tail(const AElement& e, std::complex<double> q, Tail&& tail, Shift&& shift) {
    double total = 0.0;
    for (const auto& [w, c] : e.terms()) {
        const double t = tail(w);
        if (t == 0.0) {
            continue;
        }
        total += std::abs(c.eval(1.0 - q)) * std::pow(std::abs(1.0 - q), -shift(w)) * t;
    }
    return total;
}

int choose_truncation(const QContext& ctx, const std::function<double(int)>& bound) {
    int N = ctx.truncation;
    if (!ctx.adaptive) {
        return N;
    }
    while (bound(N) >= ctx.tolerance / 10 && N < kMaxTruncation) {
        N = std::min(2 * N, kMaxTruncation);
    }
    return N;
}

void require_h0hat(const AElement& e, const char* what) {
    if (!membership(e, Space::H0hat)) {
        throw DomainError(std::string(what) + " needs an element of H0hat");
    }
}

const kernels::KernelTable& table_of(const QContext& ctx) {
    return ctx.kernels != nullptr ? *ctx.kernels : kernels::best();
}

// Sum of coefficient(1 - q) * (1 - q)^{-shift(w)} * F_w(N) over the terms.
// Also accumulates sum |term| into magnitude.
template <class T, class Shift>
T evaluate_terms(const AElement& e, T q, LetterTables<T>& tables, Shift&& shift, double& magnitude) {
    T acc(0);
    magnitude = 0.0;
    for (const auto& [w, c] : e.terms()) {
        const T coeff = c.eval(T(1) - q);
        const int s = shift(w);
        const T scale = s == 0 ? T(1) : std::pow(T(1) - q, -s);
        const T term = coeff * scale * word_partial(w, tables);
        acc += term;
        magnitude += std::abs(term);
    }
    return acc;
}

Rational exact_partial(const AElement& e, const Rational& q, int N, int shift_weight) {
    const Rational h = Rational(1) - q;
    Rational acc(0);
    for (const auto& [w, c] : e.terms()) {
        Rational term = c.eval(h) * f_word_exact(w, N, q);
        if (shift_weight >= 0) {
            // (1 - q)^{-d}; the coefficient already carries (1 - q)^{d - deg w}.
            term /= h.pow(static_cast<unsigned>(shift_weight));
        }
        acc += term;
    }
    return acc;
}

EvalResult evaluate_real(const AElement& e, const QContext& ctx, int weight_shift) {
    ctx.validate();
    const double q = ctx.q_real();
    // zbar divides by (1 - q)^d; push that into each term as (1 - q)^{-deg w}
    // after reading the coefficient at h^{d - deg w}, so h^d * 1 maps to exactly 1.
    auto shift = [&](const AWord& w) { return weight_shift >= 0 ? w.degree() : 0; };
    auto coeff_shift_element = [&]() {
        if (weight_shift < 0) {
            return e;
        }
        AElement scaled;
        for (const auto& [w, c] : e.terms()) {
            // c = c_j h^j with j = d - deg w; replace by c_j alone.
            scaled.add(w, HPoly(c.coefficient(weight_shift - w.degree())));
        }
        return scaled;
    };
    const AElement terms = coeff_shift_element();
    auto tail_at = [&](int N) {
        return element_tail(terms, q, [&](const AWord& w) { return word_tail(w, N, q); }, shift);
    };

    EvalResult result;
    result.certified = q > 0.0 && q < 1.0;
    if (ctx.mode == EvalMode::exact) {
        const Rational& qr = std::get<Rational>(ctx.q);
        const int N = ctx.truncation;
        Rational exact = exact_partial(e, qr, N, weight_shift);
        result.value = exact.to_double();
        result.magnitude = std::abs(result.value);
        result.exact_partial = std::move(exact);
        result.truncation = N;
        result.tail_bound = tail_at(N);
        return result;
    }
    const int N = choose_truncation(ctx, tail_at);
    LetterTables<double> tables(q, N, table_of(ctx));
    result.value = evaluate_terms(terms, q, tables, shift, result.magnitude);
    result.truncation = N;
    result.tail_bound = tail_at(N);
    return result;
}

}  // namespace

double QContext::q_real() const {
    if (const auto* r = std::get_if<Rational>(&q)) {
        return r->to_double();
    }
    if (const auto* d = std::get_if<double>(&q)) {
        return *d;
    }
    throw Error("complex q where a real q is required");
}

std::complex<double> QContext::q_complex() const {
    if (const auto* c = std::get_if<std::complex<double>>(&q)) {
        return *c;
    }
    return {q_real(), 0.0};
}

void QContext::validate() const {
    const double aq = std::abs(q_complex());
    if (const auto* r = std::get_if<Rational>(&q)) {
        if (r->is_zero() || r->abs() >= Rational(1)) {
            throw Error("q must satisfy 0 < |q| < 1");
        }
    } else if (!(aq > 0.0 && aq < 1.0)) {
        throw Error("q must satisfy 0 < |q| < 1");
    }
    if (truncation < 1) {
        throw Error("truncation must be positive");
    }
    if (!(tolerance > 0.0)) {
        throw Error("tolerance must be positive");
    }
    if (mode == EvalMode::exact && !std::holds_alternative<Rational>(q)) {
        throw Error("exact evaluation needs a rational q");
    }
}

double i_letter(ALetter u, int n, double q) {
    const double qint = (1.0 - std::pow(q, n)) / (1.0 - q);
    if (u.is_xi()) {
        return std::pow(q, n) / qint;
    }
    return std::pow(q, (u.k() - 1) * n) / std::pow(qint, u.k());
}

std::complex<double> i_letter(ALetter u, int n, std::complex<double> q) {
    const std::complex<double> qint = (1.0 - std::pow(q, n)) / (1.0 - q);
    if (u.is_xi()) {
        return std::pow(q, n) / qint;
    }
    return std::pow(q, (u.k() - 1) * n) / std::pow(qint, u.k());
}

Rational i_letter(ALetter u, int n, const Rational& q) {
    const Rational qn = q.pow(static_cast<unsigned>(n));
    const Rational qint = (Rational(1) - qn) / (Rational(1) - q);
    if (u.is_xi()) {
        return qn / qint;
    }
    return q.pow(static_cast<unsigned>((u.k() - 1) * n)) / qint.pow(static_cast<unsigned>(u.k()));
}

double i_rho(int, double q) { return 1.0 - q; }

double f_word(const AWord& w, int N, const QContext& ctx) {
    ctx.validate();
    LetterTables<double> tables(ctx.q_real(), N, table_of(ctx));
    return word_partial(w, tables);
}

Rational f_word_exact(const AWord& w, int N, const Rational& q) {
    if (w.empty()) {
        return Rational(1);
    }
    // letter values I_u(n), n < N, computed once per distinct letter
    std::map<std::uint8_t, std::vector<Rational>> letters;
    auto letter = [&](ALetter u) -> const std::vector<Rational>& {
        auto it = letters.find(u.code());
        if (it == letters.end()) {
            std::vector<Rational> v(static_cast<std::size_t>(std::max(N, 1)));
            for (int n = 1; n < N; ++n) {
                v[n] = i_letter(u, n, q);
            }
            it = letters.emplace(u.code(), std::move(v)).first;
        }
        return it->second;
    };
    std::vector<Rational> g(static_cast<std::size_t>(std::max(N, 1)), Rational(1));
    for (std::size_t i = w.size(); i-- > 1;) {
        const auto& iu = letter(w[i]);
        Rational acc(0);
        for (int n = 1; n < N; ++n) {
            const Rational h = iu[n] * g[n];
            g[n] = acc;
            acc += h;
        }
    }
    const auto& first = letter(w[0]);
    Rational acc(0);
    for (int n = 1; n < N; ++n) {
        acc += first[n] * g[n];
    }
    return acc;
}

EvalResult z_q(const AElement& e, const QContext& ctx) {
    require_h0hat(e, "Z_q");
    if (!ctx.is_real()) {
        throw Error("z_q needs a real q; use z_q_complex");
    }
    return evaluate_real(e, ctx, -1);
}

ComplexEvalResult z_q_complex(const AElement& e, const QContext& ctx) {
    require_h0hat(e, "Z_q");
    ctx.validate();
    const std::complex<double> q = ctx.q_complex();
    auto no_shift = [](const AWord&) { return 0; };
    auto tail_at = [&](int N) {
        return element_tail(e, q, [&](const AWord& w) { return word_tail(w, N, q); }, no_shift);
    };
    const int N = choose_truncation(ctx, tail_at);
    LetterTables<std::complex<double>> tables(q, N, table_of(ctx));
    ComplexEvalResult result;
    result.value = evaluate_terms(e, q, tables, no_shift, result.magnitude);
    result.truncation = N;
    result.tail_bound = tail_at(N);
    return result;
}

EvalResult zbar_q(const AElement& e, const QContext& ctx) {
    require_h0hat(e, "Zbar_q");
    if (e.is_zero()) {
        EvalResult zero;
        zero.truncation = ctx.truncation;
        return zero;
    }
    const auto d = e.homogeneous_weight();
    if (!d) {
        throw NotHomogeneous("Zbar_q needs a homogeneous element, got '" + e.to_string() + "'");
    }
    if (!ctx.is_real()) {
        throw Error("zbar_q needs a real q");
    }
    return evaluate_real(e, ctx, *d);
}

EvalResult l_value(const AElement& e, double t, const QContext& ctx) {
    require_h0hat(e, "L_w");
    ctx.validate();
    if (!(std::abs(t) < 1.0)) {
        throw DomainError("L_w(t) needs |t| < 1");
    }
    const double q = ctx.q_real();
    auto no_shift = [](const AWord&) { return 0; };
    auto tail_at = [&](int N) {
        return element_tail(e, q, [&](const AWord& w) { return polylog_word_tail(w, N, t, q); }, no_shift);
    };
    const int N = choose_truncation(ctx, tail_at);
    LetterTables<double> tables(q, N, table_of(ctx));
    double acc = 0.0;
    double magnitude = 0.0;
    for (const auto& [w, c] : e.terms()) {
        const double coeff = c.eval(1.0 - q);
        if (w.empty()) {
            acc += coeff;
            magnitude += std::abs(coeff);
            continue;
        }
        const unsigned k = w.front().is_xi() ? 1U : static_cast<unsigned>(w.front().k());
        const std::vector<double> weights = tables.polylog_weight(t, k);
        const std::vector<double> g = inner_sums(w, 1, tables);
        const double term = coeff * weighted_total(weights, g, tables);
        acc += term;
        magnitude += std::abs(term);
    }
    EvalResult result;
    result.value = acc;
    result.magnitude = magnitude;
    result.truncation = N;
    result.tail_bound = tail_at(N);
    result.certified = q > 0.0 && q < 1.0;
    return result;
}

DqReport dq_check(const AElement& w, double t, const QContext& ctx) {
    require_h0hat(w, "dq_check");
    if (t == 0.0 || !(std::abs(t) < 1.0)) {
        throw DomainError("dq_check needs 0 < |t| < 1");
    }
    const double q = ctx.q_real();
    const double scale = (1.0 - q) * t;
    const EvalResult at_t = l_value(w, t, ctx);
    const EvalResult at_qt = l_value(w, q * t, ctx);

    DqReport report;
    report.lhs = (at_t.value - at_qt.value) / scale;
    report.tail_bound = (at_t.tail_bound + at_qt.tail_bound) / std::abs(scale);

    const Decomposition parts = decompose(w);
    const EvalResult head = l_value(delta0(parts.hge2), t, ctx);
    report.rhs = head.value / t;
    report.tail_bound += head.tail_bound / std::abs(t);
    for (const auto& [r, comp] : parts.xi_rho) {
        const double factor = std::pow(scale, r) / std::pow(1.0 - t, r + 1);
        const EvalResult piece = l_value(delta1(comp), t, ctx);
        report.rhs += factor * piece.value;
        report.tail_bound += std::abs(factor) * piece.tail_bound;
    }
    report.difference = std::abs(report.lhs - report.rhs);
    return report;
}

EvalResult binomial_series(int k, double x, int terms) {
    if (k < 0 || !(std::abs(x) < 1.0) || terms < 1) {
        throw DomainError("binomial_series needs k >= 0, |x| < 1, terms >= 1");
    }
    double acc = 0.0;
    double term = 1.0;  // C(k + j, j) x^j at j = 0
    for (int j = 0; j < terms; ++j) {
        acc += term;
        term *= x * static_cast<double>(k + j + 1) / static_cast<double>(j + 1);
    }
    // term is now the first omitted summand; successive ratios |x|(k+j+1)/(j+1) decrease.
    const double rho = std::abs(x) * static_cast<double>(k + terms + 1) / static_cast<double>(terms + 1);
    EvalResult result;
    result.value = acc;
    result.truncation = terms;
    result.tail_bound = rho < 1.0 ? std::abs(term) / (1.0 - rho) : kInf;
    return result;
}

}  // namespace qmzv
