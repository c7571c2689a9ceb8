#include "qmzv/products.hpp"

#include "qmzv/error.hpp"

namespace qmzv {

AElement circle(ALetter a, ALetter b) {
    AElement out;
    if (a.is_xi() && b.is_xi()) {
        out.add(AWord{ALetter::z(2)}, HPoly(1));
        out.add(AWord{ALetter::xi()}, HPoly::monomial(Rational(-1), 1));
    } else if (a.is_xi() || b.is_xi()) {
        const int k = a.is_xi() ? b.k() : a.k();
        out.add(AWord{ALetter::z(k + 1)}, HPoly(1));
    } else {
        const int s = a.k() + b.k();
        out.add(AWord{ALetter::z(s)}, HPoly(1));
        out.add(AWord{ALetter::z(s - 1)}, HPoly::hbar());
    }
    return out;
}

XElement alpha(XLetter u, XLetter v) {
    using enum XLetter;
    if (u == rho || v == rho) {
        // alpha(u, rho) = alpha(rho, u) = -u rho
        const XLetter other = (u == rho) ? v : u;
        return XElement(XWord{other, rho}, HPoly(-1));
    }
    if (u == x && v == x) {
        return XElement(XWord{x}, HPoly::hbar());
    }
    if (u == y && v == y) {
        return XElement(XWord{y, rho}, HPoly(-1));
    }
    return {};
}

namespace {

const AElement& harmonic_words(const AWord& a, const AWord& b, ProductCache& cache);
const XElement& shuffle_words(const XWord& a, const XWord& b, ProductCache& cache);
AElement star_words(const AWord& a, const AWord& b, ProductCache& cache);

template <class W, class F>
Element<W> bilinear(const Element<W>& a, const Element<W>& b, F&& on_words) {
    Element<W> out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            out.add_scaled(on_words(wa, wb), ca * cb);
        }
    }
    return out;
}

const AElement& harmonic_words(const AWord& a, const AWord& b, ProductCache& cache) {
    const auto key = std::make_pair(a, b);
    if (auto it = cache.harmonic.find(key); it != cache.harmonic.end()) {
        return it->second;
    }
    AElement out;
    if (a.empty()) {
        out = AElement(b);
    } else if (b.empty()) {
        out = AElement(a);
    } else {
        const AWord ta = a.suffix(1);
        const AWord tb = b.suffix(1);
        out += harmonic_words(ta, b, cache).prepend(a.prefix(1));
        out += harmonic_words(a, tb, cache).prepend(b.prefix(1));
        out += circle(a.front(), b.front()) * harmonic_words(ta, tb, cache);
    }
    return cache.harmonic.emplace(key, std::move(out)).first->second;
}

const XElement& shuffle_words(const XWord& a, const XWord& b, ProductCache& cache) {
    const auto key = std::make_pair(a, b);
    if (auto it = cache.shuffle.find(key); it != cache.shuffle.end()) {
        return it->second;
    }
    XElement out;
    if (a.empty()) {
        out = XElement(b);
    } else if (b.empty()) {
        out = XElement(a);
    } else {
        const XWord ta = a.suffix(1);
        const XWord tb = b.suffix(1);
        out += shuffle_words(ta, b, cache).prepend(a.prefix(1));
        out += shuffle_words(a, tb, cache).prepend(b.prefix(1));
        const XElement corr = alpha(a.front(), b.front());
        if (!corr.is_zero()) {
            out += corr * shuffle_words(ta, tb, cache);
        }
    }
    return cache.shuffle.emplace(key, std::move(out)).first->second;
}

// One summand of the direct-sum decomposition of a word.
struct Piece {
    bool hge2;    // word lies in h^{>=2}; otherwise the piece is xi rho^r word
    int r = 0;
    AWord word;   // for xi pieces: empty or starting with some z_k
    int sign = 1;
};

std::vector<Piece> pieces_of(const AWord& w) {
    std::vector<Piece> out;
    if (!w.front().is_xi()) {
        out.push_back(Piece{true, 0, w, 1});
        return out;
    }
    const Decomposition d = decompose(AElement(w));
    for (const auto& [r, comp] : d.xi_rho) {
        for (const auto& [u, c] : comp.terms()) {
            out.push_back(Piece{false, r, u, c.coefficient(0).sign()});
        }
    }
    return out;
}

AElement star_elems(const AElement& a, const AElement& b, ProductCache& cache) {
    return bilinear(a, b, [&](const AWord& x, const AWord& y) { return star_words(x, y, cache); });
}

// w in h^{>=2} against xi rho^r w' with w' in h^{>=1}.
AElement star_hge2_xi(const AWord& w, int r, const AWord& wp, ProductCache& cache) {
    const AElement ew(w);
    const AElement d0 = delta0(ew);
    AElement out = i0(star_elems(d0, xi_rho(r, AElement(wp)), cache));
    const AElement inner = star_elems(ew - d0 * HPoly::hbar(), delta1(AElement(wp)), cache);
    out += xi_rho(r, i1(inner));
    return out;
}

AElement star_pieces(const Piece& p, const Piece& q, ProductCache& cache) {
    if (p.hge2 && q.hge2) {
        const AElement w(p.word);
        const AElement wp(q.word);
        const AElement d0w = delta0(w);
        const AElement d0wp = delta0(wp);
        AElement inner = star_elems(d0w, wp, cache);
        inner += star_elems(w, d0wp, cache);
        inner -= star_elems(d0w, d0wp, cache) * HPoly::hbar();
        return i0(inner);
    }
    if (p.hge2) {
        return star_hge2_xi(p.word, q.r, q.word, cache);
    }
    if (q.hge2) {
        return star_hge2_xi(q.word, p.r, p.word, cache);
    }
    const AElement w(p.word);
    const AElement wp(q.word);
    const AElement d1w = delta1(w);
    const AElement d1wp = delta1(wp);
    AElement out = xi_rho(p.r, i1(star_elems(d1w, xi_rho(q.r, wp), cache)));
    out += xi_rho(q.r, i1(star_elems(xi_rho(p.r, w), d1wp, cache)));
    out -= xi_rho(p.r + q.r + 1, i1(star_elems(d1w, d1wp, cache)));
    return out;
}

AElement star_words(const AWord& a, const AWord& b, ProductCache& cache) {
    if (a.empty()) {
        return AElement(b);
    }
    if (b.empty()) {
        return AElement(a);
    }
    if (!admissible_start(a) || !admissible_start(b)) {
        throw DomainError("star product needs arguments in H0hat, got '" + a.to_string() + "' and '" +
                          b.to_string() + "'");
    }
    const auto key = std::make_pair(a, b);
    if (auto it = cache.star.find(key); it != cache.star.end()) {
        return it->second;
    }
    AElement out;
    const auto pa = pieces_of(a);
    const auto pb = pieces_of(b);
    for (const auto& p : pa) {
        for (const auto& q : pb) {
            const AElement term = star_pieces(p, q, cache);
            out.add_scaled(term, HPoly(p.sign * q.sign));
        }
    }
    cache.star.emplace(key, out);
    return out;
}

}  // namespace

AElement harmonic(const AElement& a, const AElement& b, ProductCache& cache) {
    return bilinear(a, b, [&](const AWord& x, const AWord& y) { return harmonic_words(x, y, cache); });
}

AElement harmonic(const AElement& a, const AElement& b) {
    ProductCache cache;
    return harmonic(a, b, cache);
}

XElement shuffle_x(const XElement& a, const XElement& b, ProductCache& cache) {
    return bilinear(a, b, [&](const XWord& x, const XWord& y) { return shuffle_words(x, y, cache); });
}

XElement shuffle_x(const XElement& a, const XElement& b) {
    ProductCache cache;
    return shuffle_x(a, b, cache);
}

AElement shuffle(const AElement& a, const AElement& b, ProductCache& cache) {
    return contract_to_a(shuffle_x(expand_to_x(a), expand_to_x(b), cache));
}

AElement shuffle(const AElement& a, const AElement& b) {
    ProductCache cache;
    return shuffle(a, b, cache);
}

AElement star(const AElement& a, const AElement& b, ProductCache& cache) {
    if (!membership(a, Space::H0hat) || !membership(b, Space::H0hat)) {
        throw DomainError("star product is defined on H0hat only");
    }
    return star_elems(a, b, cache);
}

AElement star(const AElement& a, const AElement& b) {
    ProductCache cache;
    return star(a, b, cache);
}

}  // namespace qmzv
