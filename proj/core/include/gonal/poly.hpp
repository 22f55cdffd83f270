// Dense univariate polynomials over a field object F.
// A polynomial is a coefficient vector with no trailing zeros; the zero
// polynomial is the empty vector and has degree -1.
#pragma once

#include <string>
#include <vector>

#include "gonal/util.hpp"

namespace gonal {

template <class F>
struct Poly {
    std::vector<typename F::Elem> c;

    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <class F>
void poly_trim(const F& K, Poly<F>& f) {
    while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
}

template <class F>
Poly<F> poly_zero(const F&) {
    return Poly<F>{};
}

template <class F>
Poly<F> poly_const(const F& K, const typename F::Elem& a) {
    Poly<F> f;
    if (!K.is_zero(a)) f.c.push_back(a);
    return f;
}

template <class F>
Poly<F> poly_one(const F& K) {
    return poly_const(K, K.one());
}

// x^k
template <class F>
Poly<F> poly_xpow(const F& K, int k) {
    Poly<F> f;
    f.c.assign(size_t(k) + 1, K.zero());
    f.c[k] = K.one();
    return f;
}

template <class F>
Poly<F> poly_from(const F& K, std::vector<typename F::Elem> coeffs) {
    Poly<F> f{std::move(coeffs)};
    poly_trim(K, f);
    return f;
}

template <class F>
typename F::Elem poly_coeff(const F& K, const Poly<F>& f, int i) {
    if (i < 0 || i > f.deg()) return K.zero();
    return f.c[i];
}

template <class F>
typename F::Elem poly_lc(const F& K, const Poly<F>& f) {
    GONAL_CHECK(!f.is_zero(), "poly: leading coefficient of zero");
    (void)K;
    return f.c.back();
}

template <class F>
bool poly_eq(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!K.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.sub(r.c[i], b.c[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_neg(const F& K, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& x : r.c) x = K.neg(x);
    return r;
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>{};
    Poly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& K, const typename F::Elem& s, const Poly<F>& a) {
    if (K.is_zero(s)) return Poly<F>{};
    Poly<F> r = a;
    for (auto& x : r.c) x = K.mul(s, x);
    poly_trim(K, r);
    return r;
}

// q, r with a = q b + r, deg r < deg b.  b != 0.
template <class F>
void poly_divrem(const F& K, const Poly<F>& a, const Poly<F>& b, Poly<F>& q, Poly<F>& r) {
    GONAL_CHECK(!b.is_zero(), "poly: division by zero");
    r = a;
    q.c.clear();
    if (a.deg() < b.deg()) return;
    q.c.assign(size_t(a.deg() - b.deg()) + 1, K.zero());
    typename F::Elem lcinv = K.inv(b.c.back());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        typename F::Elem t = K.mul(r.c.back(), lcinv);
        int shift = r.deg() - b.deg();
        q.c[shift] = t;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] = K.sub(r.c[i + shift], K.mul(t, b.c[i]));
        poly_trim(K, r);
    }
}

template <class F>
Poly<F> poly_mod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> q, r;
    poly_divrem(K, a, b, q, r);
    return r;
}

template <class F>
Poly<F> poly_div_exact(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> q, r;
    poly_divrem(K, a, b, q, r);
    GONAL_CHECK(r.is_zero(), "poly: division not exact");
    return q;
}

template <class F>
Poly<F> poly_monic(const F& K, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(K, K.inv(a.c.back()), a);
}

// monic gcd
template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
    // unit content normalization keeps characteristic zero remainder
    // sequences at polynomial height
    constexpr bool stripped = requires { K.strip_content(a.c); };
    if constexpr (stripped) {
        K.strip_content(a.c);
        K.strip_content(b.c);
    }
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(K, a, b);
        if constexpr (stripped) K.strip_content(r.c);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(K, a);
}

// g = gcd (monic), with u a + v b = g
template <class F>
Poly<F> poly_xgcd(const F& K, const Poly<F>& a, const Poly<F>& b, Poly<F>& u, Poly<F>& v) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = poly_one(K), s1 = poly_zero(K);
    Poly<F> t0 = poly_zero(K), t1 = poly_one(K);
    while (!r1.is_zero()) {
        Poly<F> q, r;
        poly_divrem(K, r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> ns = poly_sub(K, s0, poly_mul(K, q, s1));
        s0 = std::move(s1);
        s1 = std::move(ns);
        Poly<F> nt = poly_sub(K, t0, poly_mul(K, q, t1));
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.is_zero()) {
        u = poly_zero(K);
        v = poly_zero(K);
        return r0;
    }
    typename F::Elem c = K.inv(r0.c.back());
    u = poly_scale(K, c, s0);
    v = poly_scale(K, c, t0);
    return poly_scale(K, c, r0);
}

template <class F>
Poly<F> poly_derivative(const F& K, const Poly<F>& a, int64_t characteristic = 0) {
    Poly<F> r;
    if (a.deg() < 1) return r;
    r.c.assign(size_t(a.deg()), K.zero());
    for (int i = 1; i <= a.deg(); ++i) {
        typename F::Elem m = K.zero();
        // i * a_i by repeated addition is fine if i is reduced first in char p
        int64_t k = characteristic > 0 ? i % characteristic : i;
        for (int64_t j = 0; j < k; ++j) m = K.add(m, a.c[i]);
        r.c[i - 1] = m;
    }
    poly_trim(K, r);
    return r;
}

template <class F>
typename F::Elem poly_eval(const F& K, const Poly<F>& a, const typename F::Elem& x) {
    typename F::Elem r = K.zero();
    for (int i = a.deg(); i >= 0; --i) r = K.add(K.mul(r, x), a.c[i]);
    return r;
}

// x^D * a(1/x) for D >= deg a
template <class F>
Poly<F> poly_reciprocal(const F& K, const Poly<F>& a, int D) {
    GONAL_CHECK(D >= a.deg(), "poly: reciprocal degree too small");
    Poly<F> r;
    r.c.assign(size_t(D) + 1, K.zero());
    for (int i = 0; i <= a.deg(); ++i) r.c[D - i] = a.c[i];
    poly_trim(K, r);
    return r;
}

// a(x)^e mod m(x)
template <class F>
Poly<F> poly_powmod(const F& K, Poly<F> a, uint64_t e, const Poly<F>& m) {
    Poly<F> r = poly_one(K);
    a = poly_mod(K, a, m);
    while (e) {
        if (e & 1) r = poly_mod(K, poly_mul(K, r, a), m);
        a = poly_mod(K, poly_mul(K, a, a), m);
        e >>= 1;
    }
    return r;
}

// a(x)^e mod m(x) with multiword exponent (base 2^32, little-endian)
template <class F>
Poly<F> poly_powmod_limbs(const F& K, Poly<F> a, const std::vector<uint32_t>& limbs, const Poly<F>& m) {
    Poly<F> r = poly_one(K);
    a = poly_mod(K, a, m);
    for (size_t w = 0; w < limbs.size(); ++w) {
        uint32_t word = limbs[w];
        for (int bit = 0; bit < 32; ++bit) {
            if (word & (uint32_t(1) << bit)) r = poly_mod(K, poly_mul(K, r, a), m);
            a = poly_mod(K, poly_mul(K, a, a), m);
        }
    }
    return r;
}

// a(b(x)): used for small substitutions (x -> x + c and friends)
template <class F>
Poly<F> poly_compose(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    for (int i = a.deg(); i >= 0; --i) {
        r = poly_mul(K, r, b);
        r = poly_add(K, r, poly_const(K, a.c[i]));
    }
    return r;
}

template <class F>
std::string poly_str(const F& K, const Poly<F>& a, const std::string& var = "x") {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = a.deg(); i >= 0; --i) {
        if (K.is_zero(a.c[i])) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += K.str(a.c[i]);
        else {
            std::string cs = K.str(a.c[i]);
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace gonal
