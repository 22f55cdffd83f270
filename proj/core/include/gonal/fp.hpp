// Arithmetic in the prime field F_p, p an odd prime < 2^31.
#pragma once

#include <cstdint>

#include "gonal/util.hpp"

namespace gonal {

// Elements are canonical representatives in [0, p).
struct FpField {
    using Elem = int64_t;
    int64_t p;

    explicit FpField(int64_t p_) : p(p_) {
        GONAL_CHECK(p >= 2 && p < (int64_t(1) << 31), "fp: modulus out of range");
    }

    static constexpr bool char_zero = false;

    Elem zero() const { return 0; }
    Elem one() const { return p == 1 ? 0 : 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem reduce(int64_t a) const {
        int64_t r = a % p;
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const {
        int64_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const {
        int64_t s = a - b;
        return s < 0 ? s + p : s;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return int64_t((__int128)a * b % p); }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        GONAL_CHECK(a != 0, "fp: division by zero");
        // extended Euclid on (a, p)
        int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        GONAL_CHECK(r == 1, "fp: modulus not prime or zero divisor");
        return t < 0 ? t + p : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // Representative in (-p/2, p/2].
    int64_t centered(Elem a) const { return 2 * a > p ? a - p : a; }

    std::string str(Elem a) const { return std::to_string(a); }
};

inline bool is_prime_i64(int64_t n) {
    if (n < 2) return false;
    for (int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for n < 3.3e24 with these bases
    auto mulmod = [&](int64_t a, int64_t b) { return int64_t((__int128)a * b % n); };
    auto powmod = [&](int64_t a, int64_t e) {
        int64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        int64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace gonal
