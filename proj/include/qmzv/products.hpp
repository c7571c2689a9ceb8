#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmzv/algebra.hpp"

namespace qmzv {

// Commutative product on the span of A:
//   z_k o z_l = z_{k+l} + h z_{k+l-1},  xi o z_k = z_{k+1},  xi o xi = z_2 - h xi.
AElement circle(ALetter a, ALetter b);

// Correction term of the shuffle recursion:
//   alpha(x,x) = h x, alpha(x,y) = 0, alpha(y,y) = -y rho, alpha(u,rho) = alpha(rho,u) = -u rho.
XElement alpha(XLetter u, XLetter v);

namespace detail {
struct WordPairHash {
    template <class W>
    std::size_t operator()(const std::pair<W, W>& p) const noexcept {
        const std::size_t a = std::hash<W>{}(p.first);
        const std::size_t b = std::hash<W>{}(p.second);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    }
};
}  // namespace detail

// Memo tables for the recursive products, keyed by ordered word pairs.
// Owned by the caller; the free functions without a cache argument use a
// fresh one per call. Not thread safe: use one cache per thread.
class ProductCache {
public:
    std::unordered_map<std::pair<AWord, AWord>, AElement, detail::WordPairHash> harmonic;
    std::unordered_map<std::pair<XWord, XWord>, XElement, detail::WordPairHash> shuffle;
    std::unordered_map<std::pair<AWord, AWord>, AElement, detail::WordPairHash> star;

    void clear() {
        harmonic.clear();
        shuffle.clear();
        star.clear();
    }
};

// Harmonic (quasi-shuffle) product on H^1:
//   (u1 w) * (u2 w') = u1 (w * u2 w') + u2 (u1 w * w') + (u1 o u2)(w * w').
AElement harmonic(const AElement& a, const AElement& b);
AElement harmonic(const AElement& a, const AElement& b, ProductCache& cache);

// Integral shuffle product on the {x, y, rho} algebra:
//   uw sh vw' = u (w sh vw') + v (uw sh w') + alpha(u, v)(w sh w').
XElement shuffle_x(const XElement& a, const XElement& b);
XElement shuffle_x(const XElement& a, const XElement& b, ProductCache& cache);

// Shuffle of A-basis elements through the X-basis. Throws NotInH1 when the
// result does not contract (an input outside H^1).
AElement shuffle(const AElement& a, const AElement& b);
AElement shuffle(const AElement& a, const AElement& b, ProductCache& cache);

// Star product on H0hat; DomainError for inputs outside H0hat.
AElement star(const AElement& a, const AElement& b);
AElement star(const AElement& a, const AElement& b, ProductCache& cache);

// --- structural maps --------------------------------------------------------

// h^{>=2} -> H0tilde: z_2 w -> xi w, z_k w -> z_{k-1} w (k >= 3), 1 -> 0.
AElement delta0(const AElement& e);
// h^{>=1} -> H0hat: z_k w -> (sum_{a=2}^k C(k-1,a-1)(-h)^{k-a} z_a + (-h)^{k-1} xi) w, 1 -> 1.
AElement delta1(const AElement& e);
// H0tilde -> h^{>=2}: xi w -> z_2 w, z_k w -> z_{k+1} w.
AElement i0(const AElement& e);
// H0hat -> h^{>=1}: 1 -> 1, xi w -> z_1 w, z_k w -> (sum_{a=1}^k C(k-1,a-1) h^{k-a} z_a) w.
AElement i1(const AElement& e);
// Mutually inverse isomorphisms of H0hat fixing xi-words:
//   e(z_k w) = (sum_{a=2}^k C(k-2,a-2) h^{k-a} z_a) w, e_inv with -h in place of h.
AElement e_map(const AElement& e);
AElement e_inv(const AElement& e);
// phi_k = sum_{a=2}^k (-h)^{k-a} z_a + (-h)^{k-1} xi.
AElement phi(int k);

// Decomposition H0hat = h^{>=2} (+) sum_r xi rho^r h^{>=1}.
struct Decomposition {
    AElement hge2;
    // r -> component w_r in h^{>=1}, the summand being xi rho^r w_r.
    std::map<int, AElement> xi_rho;

    AElement recompose() const;
};

// DomainError when e is not in H0hat.
Decomposition decompose(const AElement& e);

// xi rho^r w in the A-basis.
AElement xi_rho(int r, const AElement& w);

}  // namespace qmzv
