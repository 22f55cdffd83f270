// Ring adapters and fraction-free (Bareiss) elimination: determinants and
// Sylvester resultants over any commutative ring with exact division.
#pragma once

#include <vector>

#include "gonal/poly.hpp"
#include "gonal/util.hpp"

namespace gonal {

// Any field is a ring with divexact = div.
template <class F>
struct FieldAsRing {
    using Elem = typename F::Elem;
    static constexpr bool char_zero = F::char_zero;
    const F& k;
    explicit FieldAsRing(const F& base) : k(base) {}
    Elem zero() const { return k.zero(); }
    Elem one() const { return k.one(); }
    bool is_zero(const Elem& a) const { return k.is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return k.eq(a, b); }
    Elem add(const Elem& a, const Elem& b) const { return k.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return k.sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return k.mul(a, b); }
    Elem neg(const Elem& a) const { return k.neg(a); }
    Elem divexact(const Elem& a, const Elem& b) const { return k.div(a, b); }
    std::string str(const Elem& a) const { return k.str(a); }
};

// k[x] as a ring object whose elements are Poly<F>.
template <class F>
struct PolyRing1 {
    using Elem = Poly<F>;
    static constexpr bool char_zero = F::char_zero;
    const F& k;
    explicit PolyRing1(const F& base) : k(base) {}
    Elem zero() const { return Poly<F>{}; }
    Elem one() const { return poly_one(k); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(k, a, b); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(k, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(k, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(k, a, b); }
    Elem neg(const Elem& a) const { return poly_neg(k, a); }
    Elem divexact(const Elem& a, const Elem& b) const { return poly_div_exact(k, a, b); }
    std::string str(const Elem& a) const { return poly_str(k, a); }
};

// Bareiss fraction-free determinant.  Entries stay in the ring; every
// division is exact.  A is consumed.
template <class R>
typename R::Elem det_bareiss(const R& ring, std::vector<typename R::Elem> a, size_t n) {
    GONAL_CHECK(a.size() == n * n, "bareiss: shape mismatch");
    if (n == 0) return ring.one();
    auto at = [&](size_t i, size_t j) -> typename R::Elem& { return a[i * n + j]; };
    typename R::Elem prev = ring.one();
    bool negate = false;
    for (size_t kk = 0; kk + 1 < n; ++kk) {
        if (ring.is_zero(at(kk, kk))) {
            size_t pr = kk + 1;
            while (pr < n && ring.is_zero(at(pr, kk))) ++pr;
            if (pr == n) return ring.zero();
            for (size_t j = 0; j < n; ++j) std::swap(at(pr, j), at(kk, j));
            negate = !negate;
        }
        for (size_t i = kk + 1; i < n; ++i) {
            for (size_t j = kk + 1; j < n; ++j) {
                typename R::Elem t =
                    ring.sub(ring.mul(at(i, j), at(kk, kk)), ring.mul(at(i, kk), at(kk, j)));
                at(i, j) = ring.divexact(t, prev);
            }
            at(i, kk) = ring.zero();
        }
        prev = at(kk, kk);
    }
    typename R::Elem d = at(n - 1, n - 1);
    return negate ? ring.neg(d) : d;
}

// Resultant of f = sum f_i X^i (degree m) and g (degree n) with respect to X,
// where coefficients live in `ring`.  Determinant of the Sylvester matrix
// with the f-rows first.  Zero polynomials are not allowed.
template <class R>
typename R::Elem sylvester_resultant(const R& ring, const std::vector<typename R::Elem>& f,
                                     const std::vector<typename R::Elem>& g) {
    int m = int(f.size()) - 1, n = int(g.size()) - 1;
    GONAL_CHECK(m >= 0 && n >= 0, "resultant: zero polynomial");
    if (m == 0 && n == 0) return ring.one();
    size_t N = size_t(m + n);
    std::vector<typename R::Elem> S(N * N, ring.zero());
    auto at = [&](size_t i, size_t j) -> typename R::Elem& { return S[i * N + j]; };
    // n rows of f coefficients (descending), then m rows of g
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) at(size_t(r), size_t(r + i)) = f[size_t(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) at(size_t(n + r), size_t(r + i)) = g[size_t(n - i)];
    return det_bareiss(ring, std::move(S), N);
}

}  // namespace gonal
