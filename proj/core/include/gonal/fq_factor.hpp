// Univariate factorization over F_q: squarefree decomposition (including
// p-th powers), distinct-degree splitting, Cantor-Zassenhaus equal-degree
// splitting (q odd throughout this project), root finding, irreducibility
// tests and random irreducibles.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "gonal/fq.hpp"
#include "gonal/poly.hpp"
#include "gonal/util.hpp"

namespace gonal {

inline std::vector<uint32_t> mpz_to_limbs(const mpz_class& n) {
    GONAL_CHECK(n >= 0, "mpz_to_limbs: negative");
    std::vector<uint32_t> limbs;
    mpz_class v = n;
    while (v > 0) {
        limbs.push_back(uint32_t(mpz_class(v & 0xffffffff).get_ui()));
        v >>= 32;
    }
    if (limbs.empty()) limbs.push_back(0);
    return limbs;
}

inline mpz_class fq_card(const FqField& K) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), unsigned(K.fp.p), unsigned(K.n));
    return q;
}

// c -> unique p-th root, i.e. c^(p^(n-1))
inline FqField::Elem fq_pth_root(const FqField& K, const FqField::Elem& c) {
    FqField::Elem r = c;
    for (int i = 0; i + 1 < K.n; ++i) r = K.frobenius(r);
    return r;
}

// f with f' = 0, i.e. f = u(x^p); returns u
inline Poly<FqField> poly_pth_root(const FqField& K, const Poly<FqField>& f) {
    int64_t p = K.fp.p;
    Poly<FqField> u;
    for (size_t j = 0; j * size_t(p) < f.c.size(); ++j) {
        GONAL_CHECK(j * size_t(p) < f.c.size(), "pth_root: bad support");
        u.c.push_back(fq_pth_root(K, f.c[j * size_t(p)]));
    }
    for (size_t i = 0; i < f.c.size(); ++i)
        if (i % size_t(p) != 0) GONAL_CHECK(K.is_zero(f.c[i]), "pth_root: not a p-th power");
    poly_trim(K, u);
    return u;
}

// monic f = prod g_i^i with g_i squarefree, pairwise coprime; returns (g_i, i)
inline void fq_squarefree_decomp(const FqField& K, const Poly<FqField>& fin,
                                 std::vector<std::pair<Poly<FqField>, int>>& out, int mult = 1) {
    Poly<FqField> f = poly_monic(K, fin);
    if (f.deg() <= 0) return;
    Poly<FqField> fp = poly_derivative(K, f, K.fp.p);
    if (fp.is_zero()) {
        fq_squarefree_decomp(K, poly_pth_root(K, f), out, mult * int(K.fp.p));
        return;
    }
    Poly<FqField> w = poly_gcd(K, f, fp);
    Poly<FqField> v = poly_div_exact(K, f, w);
    int i = 1;
    while (v.deg() > 0) {
        Poly<FqField> y = poly_gcd(K, v, w);
        Poly<FqField> z = poly_div_exact(K, v, y);
        if (z.deg() > 0) out.push_back({z, mult * i});
        v = y;
        w = poly_div_exact(K, w, y);
        ++i;
    }
    if (w.deg() > 0) fq_squarefree_decomp(K, poly_pth_root(K, w), out, mult * int(K.fp.p));
}

inline Poly<FqField> fq_squarefree_part(const FqField& K, const Poly<FqField>& f) {
    std::vector<std::pair<Poly<FqField>, int>> dec;
    fq_squarefree_decomp(K, f, dec);
    Poly<FqField> r = poly_one(K);
    for (auto& [g, m] : dec) r = poly_mul(K, r, g);
    return r;
}

// x^(q^k) mod f, iterating h -> h^q
inline Poly<FqField> fq_xq_pow(const FqField& K, const Poly<FqField>& f, const Poly<FqField>& start,
                               int k) {
    auto limbs = mpz_to_limbs(fq_card(K));
    Poly<FqField> h = start;
    for (int i = 0; i < k; ++i) h = poly_powmod_limbs(K, h, limbs, f);
    return h;
}

// distinct-degree decomposition of squarefree monic f: (product of degree-d factors, d)
inline std::vector<std::pair<Poly<FqField>, int>> fq_ddf(const FqField& K, const Poly<FqField>& fin) {
    std::vector<std::pair<Poly<FqField>, int>> out;
    Poly<FqField> f = poly_monic(K, fin);
    auto limbs = mpz_to_limbs(fq_card(K));
    Poly<FqField> x = poly_xpow(K, 1);
    Poly<FqField> h = poly_mod(K, x, f);
    int d = 0;
    while (f.deg() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod_limbs(K, h, limbs, f);
        Poly<FqField> g = poly_gcd(K, poly_sub(K, h, poly_mod(K, x, f)), f);
        if (g.deg() > 0) {
            out.push_back({g, d});
            f = poly_div_exact(K, f, g);
            h = poly_mod(K, h, f);
        }
    }
    if (f.deg() > 0) out.push_back({f, f.deg()});
    return out;
}

// equal-degree splitting: f squarefree monic, all irreducible factors of degree d, q odd
inline void fq_edf(const FqField& K, const Poly<FqField>& f, int d,
                   std::vector<Poly<FqField>>& out, rng64& rng) {
    int n = f.deg();
    if (n == 0) return;
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), fq_card(K).get_mpz_t(), unsigned(d));
    auto elimbs = mpz_to_limbs((qd - 1) / 2);
    for (;;) {
        Poly<FqField> r;
        for (int i = 0; i < n; ++i) r.c.push_back(K.random(rng));
        poly_trim(K, r);
        if (r.deg() < 1) continue;
        Poly<FqField> g = poly_gcd(K, r, f);
        if (g.deg() == 0) {
            Poly<FqField> s = poly_powmod_limbs(K, r, elimbs, f);
            g = poly_gcd(K, poly_sub(K, s, poly_one(K)), f);
        }
        if (g.deg() > 0 && g.deg() < n) {
            fq_edf(K, g, d, out, rng);
            fq_edf(K, poly_div_exact(K, f, g), d, out, rng);
            return;
        }
    }
}

// full factorization of nonzero f: (monic irreducible, multiplicity); lc dropped
inline std::vector<std::pair<Poly<FqField>, int>> fq_factor(const FqField& K, const Poly<FqField>& f,
                                                            uint64_t seed = 0x9e3779b97f4a7c15ull) {
    GONAL_CHECK(!f.is_zero(), "factor: zero polynomial");
    rng64 rng(seed);
    std::vector<std::pair<Poly<FqField>, int>> result;
    std::vector<std::pair<Poly<FqField>, int>> sqf;
    fq_squarefree_decomp(K, f, sqf);
    for (auto& [g, mult] : sqf) {
        for (auto& [h, d] : fq_ddf(K, g)) {
            std::vector<Poly<FqField>> irr;
            fq_edf(K, h, d, irr, rng);
            for (auto& u : irr) result.push_back({u, mult});
        }
    }
    std::sort(result.begin(), result.end(), [&](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i) {
            const auto& ca = poly_coeff(K, a.first, i);
            const auto& cb = poly_coeff(K, b.first, i);
            if (!K.eq(ca, cb)) return ca < cb;
        }
        return false;
    });
    return result;
}

// roots of f in F_q (each listed once, multiplicity ignored)
inline std::vector<FqField::Elem> fq_roots(const FqField& K, const Poly<FqField>& f,
                                           uint64_t seed = 0x2545f4914f6cdd1dull) {
    std::vector<FqField::Elem> roots;
    if (f.is_zero()) throw internal_error("roots: zero polynomial");
    Poly<FqField> g = fq_squarefree_part(K, f);
    auto limbs = mpz_to_limbs(fq_card(K));
    Poly<FqField> x = poly_xpow(K, 1);
    Poly<FqField> xq = poly_powmod_limbs(K, poly_mod(K, x, g), limbs, g);
    Poly<FqField> lin = poly_gcd(K, poly_sub(K, xq, poly_mod(K, x, g)), g);
    if (lin.deg() <= 0) return roots;
    std::vector<Poly<FqField>> facs;
    rng64 rng(seed);
    fq_edf(K, lin, 1, facs, rng);
    for (auto& u : facs) roots.push_back(K.neg(poly_coeff(K, u, 0)));
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline bool fq_is_irreducible(const FqField& K, const Poly<FqField>& f) {
    int d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    Poly<FqField> fm = poly_monic(K, f);
    Poly<FqField> x = poly_mod(K, poly_xpow(K, 1), fm);
    // x^(q^d) == x mod f, and gcd(x^(q^(d/l)) - x, f) = 1 for prime l | d
    std::vector<int> primes;
    int dd = d;
    for (int l = 2; l * l <= dd; ++l)
        if (dd % l == 0) {
            primes.push_back(l);
            while (dd % l == 0) dd /= l;
        }
    if (dd > 1) primes.push_back(dd);
    for (int l : primes) {
        Poly<FqField> h = fq_xq_pow(K, fm, x, d / l);
        if (poly_gcd(K, poly_sub(K, h, x), fm).deg() != 0) return false;
    }
    Poly<FqField> h = fq_xq_pow(K, fm, x, d);
    return poly_eq(K, h, x);
}

inline Poly<FqField> fq_random_irreducible(const FqField& K, int d, rng64& rng) {
    GONAL_CHECK(d >= 1, "random_irreducible: degree");
    for (int tries = 0; tries < 100000; ++tries) {
        Poly<FqField> f;
        for (int i = 0; i < d; ++i) f.c.push_back(K.random(rng));
        f.c.push_back(K.one());
        if (fq_is_irreducible(K, f)) return f;
    }
    throw internal_error("random_irreducible: no luck");
}

}  // namespace gonal
