// Arithmetic in F_q = F_p[t]/(mbar), q = p^n.  Elements are coefficient
// vectors of length n over F_p (index i = coefficient of t^i).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gonal/fp.hpp"
#include "gonal/util.hpp"

namespace gonal {

struct FqField {
    using Elem = std::vector<int64_t>;

    FpField fp;
    int n;
    // monic modulus mbar of degree n; mod[i] = coefficient of t^i, mod[n] = 1
    std::vector<int64_t> mod;

    static constexpr bool char_zero = false;

    FqField(int64_t p_, std::vector<int64_t> modulus) : fp(p_), n(int(modulus.size()) - 1), mod(std::move(modulus)) {
        GONAL_CHECK(n >= 1, "fq: modulus must have degree >= 1");
        for (auto& c : mod) c = fp.reduce(c);
        GONAL_CHECK(mod[n] == 1, "fq: modulus must be monic");
    }
    // prime field shortcut
    explicit FqField(int64_t p_) : FqField(p_, {0, 1}) {}

    int64_t p() const { return fp.p; }
    // q = p^n as double-safe check + exact when fits; callers needing the true
    // size use q_bits/pow-by-exponent helpers instead.
    bool q_fits_u64() const {
        long double v = 1;
        for (int i = 0; i < n; ++i) v *= (long double)fp.p;
        return v < (long double)UINT64_MAX;
    }
    uint64_t q_u64() const {
        GONAL_CHECK(q_fits_u64(), "fq: q does not fit in 64 bits");
        uint64_t v = 1;
        for (int i = 0; i < n; ++i) v *= uint64_t(fp.p);
        return v;
    }

    Elem zero() const { return Elem(n, 0); }
    Elem one() const {
        Elem e(n, 0);
        e[0] = 1;
        return e;
    }
    Elem from_int(int64_t v) const {
        Elem e(n, 0);
        e[0] = fp.reduce(v);
        return e;
    }
    Elem gen() const {
        // the class of t (equals a scalar when n = 1)
        Elem e(n, 0);
        if (n == 1)
            e[0] = fp.neg(mod[0]);
        else
            e[1] = 1;
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = fp.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = fp.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = fp.neg(a[i]);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (n == 1) return Elem{fp.mul(a[0], b[0])};
        std::vector<int64_t> prod(2 * n - 1, 0);
        for (int i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < n; ++j) prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
        }
        // reduce mod the monic modulus
        for (int i = 2 * n - 2; i >= n; --i) {
            int64_t c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (int j = 0; j < n; ++j) prod[i - n + j] = fp.sub(prod[i - n + j], fp.mul(c, mod[j]));
        }
        prod.resize(n);
        return prod;
    }

    Elem scalar_mul(int64_t s, const Elem& a) const {
        int64_t ss = fp.reduce(s);
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = fp.mul(ss, a[i]);
        return r;
    }

    Elem pow(const Elem& a, uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // a^e for a multiword exponent given in base 2^32 little-endian limbs.
    Elem pow_limbs(const Elem& a, const std::vector<uint32_t>& limbs) const {
        Elem r = one(), base = a;
        for (size_t w = 0; w < limbs.size(); ++w) {
            uint32_t word = limbs[w];
            for (int bit = 0; bit < 32; ++bit) {
                if (word & (uint32_t(1) << bit)) {
                    // base currently holds a^(2^(32w+bit))
                    r = mul(r, base);
                }
                base = mul(base, base);
            }
        }
        return r;
    }

    Elem inv(const Elem& a) const {
        GONAL_CHECK(!is_zero(a), "fq: division by zero");
        if (n == 1) return Elem{fp.inv(a[0])};
        // extended Euclid in F_p[t] on (a, mod)
        std::vector<int64_t> r0 = mod, r1 = a;
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        std::vector<int64_t> t0{}, t1{1};
        auto deg = [](const std::vector<int64_t>& v) { return int(v.size()) - 1; };
        while (!r1.empty()) {
            // divide r0 by r1
            std::vector<int64_t> rem = r0, quo(std::max<size_t>(1, rem.size() - r1.size() + 1), 0);
            int64_t lcinv = fp.inv(r1.back());
            while (deg(rem) >= deg(r1) && !rem.empty()) {
                int64_t c = fp.mul(rem.back(), lcinv);
                int shift = deg(rem) - deg(r1);
                quo[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[i + shift] = fp.sub(rem[i + shift], fp.mul(c, r1[i]));
                while (!rem.empty() && rem.back() == 0) rem.pop_back();
            }
            // (t0, t1) <- (t1, t0 - q t1)
            std::vector<int64_t> nt(std::max(t0.size(), quo.size() + t1.size()), 0);
            for (size_t i = 0; i < t0.size(); ++i) nt[i] = t0[i];
            for (size_t i = 0; i < quo.size(); ++i) {
                if (!quo[i]) continue;
                for (size_t j = 0; j < t1.size(); ++j)
                    nt[i + j] = fp.sub(nt[i + j], fp.mul(quo[i], t1[j]));
            }
            while (!nt.empty() && nt.back() == 0) nt.pop_back();
            t0 = t1;
            t1 = nt;
            r0 = r1;
            r1 = rem;
        }
        GONAL_CHECK(deg(r0) == 0, "fq: modulus not irreducible (zero divisor hit)");
        int64_t c = fp.inv(r0[0]);
        Elem res(n, 0);
        for (size_t i = 0; i < t0.size(); ++i) res[i] = fp.mul(c, t0[i]);
        return res;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    // Frobenius x -> x^p and its powers.
    Elem frobenius(const Elem& a, int times = 1) const {
        Elem r = a;
        for (int i = 0; i < times; ++i) r = pow(r, uint64_t(fp.p));
        return r;
    }

    // Absolute trace and norm down to F_p are not needed; trace to subfields
    // is handled by the generic linear algebra layer.

    std::string str(const Elem& a) const {
        if (n == 1) return std::to_string(a[0]);
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + "]";
    }

    Elem random(rng64& rng) const {
        Elem e(n);
        for (int i = 0; i < n; ++i) e[i] = int64_t(rng.below(uint64_t(fp.p)));
        return e;
    }
};

}  // namespace gonal
