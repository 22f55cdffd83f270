// GMP-backed exact integers and rationals as field/ring objects.
#pragma once

#include <gmpxx.h>

#include <string>

#include "gonal/util.hpp"

namespace gonal {

struct QField {
    using Elem = mpq_class;
    static constexpr bool char_zero = true;

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem from_int(int64_t v) const { return mpq_class(mpz_class(v)); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        GONAL_CHECK(sgn(a) != 0, "q: division by zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem divexact(const Elem& a, const Elem& b) const { return div(a, b); }
    std::string str(const Elem& a) const { return a.get_str(); }
};

// Integers as a ring with exact division (for Bareiss, multivariate work).
struct ZRing {
    using Elem = mpz_class;
    static constexpr bool char_zero = true;

    Elem zero() const { return mpz_class(0); }
    Elem one() const { return mpz_class(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem divexact(const Elem& a, const Elem& b) const {
        GONAL_CHECK(sgn(b) != 0, "z: division by zero");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        GONAL_CHECK(sgn(r) == 0, "z: division not exact");
        return q;
    }
    std::string str(const Elem& a) const { return a.get_str(); }
};

// F_p as a ring of int64 residues with Barrett-free mulmod; used as a fast
// coefficient ring for the modular stage of the quintic precomputation.
struct FpRing {
    using Elem = int64_t;
    static constexpr bool char_zero = false;
    int64_t p;
    explicit FpRing(int64_t p_) : p(p_) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        int64_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const {
        int64_t s = a - b;
        return s < 0 ? s + p : s;
    }
    Elem mul(Elem a, Elem b) const { return int64_t((__int128)a * b % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem reduce(int64_t v) const {
        int64_t r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem inv(Elem a) const {
        GONAL_CHECK(a != 0, "fpring: division by zero");
        int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr) {
            int64_t q = r / nr, tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        GONAL_CHECK(r == 1, "fpring: not invertible");
        return t < 0 ? t + p : t;
    }
    Elem divexact(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string str(Elem a) const { return std::to_string(a); }
};

}  // namespace gonal
