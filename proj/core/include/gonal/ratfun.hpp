// Rational functions over a coefficient field: the fraction field k(x) of
// k[x].  Elements keep den monic and gcd(num, den) = 1.
#pragma once

#include "gonal/poly.hpp"

namespace gonal {

template <class F>
struct RatFunField {
    using Base = F;
    struct Elem {
        Poly<F> num, den;  // den monic, nonzero
    };
    static constexpr bool char_zero = F::char_zero;

    const F& k;
    explicit RatFunField(const F& base) : k(base) {}

    Elem make(Poly<F> n, Poly<F> d) const {
        GONAL_CHECK(!d.is_zero(), "ratfun: zero denominator");
        if (n.is_zero()) return Elem{Poly<F>{}, poly_one(k)};
        Poly<F> g = poly_gcd(k, n, d);
        if (g.deg() > 0) {
            n = poly_div_exact(k, n, g);
            d = poly_div_exact(k, d, g);
        }
        typename F::Elem lc = poly_lc(k, d);
        if (!k.eq(lc, k.one())) {
            typename F::Elem ilc = k.inv(lc);
            n = poly_scale(k, ilc, n);
            d = poly_scale(k, ilc, d);
        }
        return Elem{std::move(n), std::move(d)};
    }
    Elem from_poly(Poly<F> n) const { return Elem{std::move(n), poly_one(k)}; }

    Elem zero() const { return Elem{Poly<F>{}, poly_one(k)}; }
    Elem one() const { return Elem{poly_one(k), poly_one(k)}; }
    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(k, a.num, b.num) && poly_eq(k, a.den, b.den); }

    Elem add(const Elem& a, const Elem& b) const {
        return make(poly_add(k, poly_mul(k, a.num, b.den), poly_mul(k, b.num, a.den)), poly_mul(k, a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return make(poly_sub(k, poly_mul(k, a.num, b.den), poly_mul(k, b.num, a.den)), poly_mul(k, a.den, b.den));
    }
    Elem mul(const Elem& a, const Elem& b) const { return make(poly_mul(k, a.num, b.num), poly_mul(k, a.den, b.den)); }
    Elem neg(const Elem& a) const { return Elem{poly_neg(k, a.num), a.den}; }
    Elem inv(const Elem& a) const {
        GONAL_CHECK(!a.num.is_zero(), "ratfun: division by zero");
        return make(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_poly(const Elem& a) const { return a.den.deg() == 0; }
    Poly<F> to_poly(const Elem& a) const {
        GONAL_CHECK(is_poly(a), "ratfun: not a polynomial");
        return a.num;  // den is monic of degree 0, hence 1
    }
    // true when the denominator is a power of x
    bool den_is_xpower(const Elem& a) const {
        for (int i = 0; i < a.den.deg(); ++i)
            if (!k.is_zero(a.den.c[i])) return false;
        return true;
    }

    std::string str(const Elem& a) const {
        if (is_poly(a)) return poly_str(k, a.num);
        return "(" + poly_str(k, a.num) + ")/(" + poly_str(k, a.den) + ")";
    }
};

}  // namespace gonal
