// K = Q[t]/(m) for a monic integer polynomial m, together with its order
// O_K = Z[t]/(m).  With n = deg m = 1 this degenerates to Q / Z, which is the
// common case; the same code path is used throughout so that q = p^n towers
// need no special casing.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gonal/rational.hpp"
#include "gonal/util.hpp"

namespace gonal {

struct NumberFieldQ {
    using Elem = std::vector<mpq_class>;  // length n, index i = coeff of t^i
    static constexpr bool char_zero = true;

    int n;
    std::vector<mpz_class> mod;  // monic, degree n; mod[i] = coeff of t^i

    explicit NumberFieldQ(std::vector<mpz_class> modulus) : n(int(modulus.size()) - 1), mod(std::move(modulus)) {
        GONAL_CHECK(n >= 1, "numberfield: modulus must have degree >= 1");
        GONAL_CHECK(mod[n] == 1, "numberfield: modulus must be monic");
    }
    // plain Q
    NumberFieldQ() : n(1), mod{mpz_class(0), mpz_class(1)} {}

    Elem zero() const { return Elem(n, mpq_class(0)); }
    Elem one() const {
        Elem e(n, mpq_class(0));
        e[0] = 1;
        return e;
    }
    Elem from_int(long v) const {
        Elem e(n, mpq_class(0));
        e[0] = v;
        return e;
    }
    Elem from_q(const mpq_class& v) const {
        Elem e(n, mpq_class(0));
        e[0] = v;
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (sgn(c) != 0) return false;
        return true;
    }

    // rescale a coefficient list by a positive rational so all coordinates
    // become coprime integers; a unit scaling that curbs height growth in
    // remainder sequences
    void strip_content(std::vector<Elem>& c) const {
        mpz_class den(1), num(0);
        for (const auto& e : c)
            for (const auto& q : e) {
                if (sgn(q) == 0) continue;
                mpz_class d = q.get_den();
                den = den / gcd(den, d) * d;
            }
        for (const auto& e : c)
            for (const auto& q : e) {
                if (sgn(q) == 0) continue;
                num = gcd(num, mpz_class(q.get_num() * (den / q.get_den())));
            }
        if (num == 0) return;
        mpq_class s = mpq_class(den) / mpq_class(num);
        if (s == 1) return;
        for (auto& e : c)
            for (auto& q : e) q *= s;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (int i = 0; i < n; ++i)
            if (cmp(a[i], b[i]) != 0) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = a[i] + b[i];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = a[i] - b[i];
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(n);
        for (int i = 0; i < n; ++i) r[i] = -a[i];
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (n == 1) return Elem{a[0] * b[0]};
        std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
        for (int i = 0; i < n; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (int j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
        }
        for (int i = 2 * n - 2; i >= n; --i) {
            if (sgn(prod[i]) == 0) continue;
            mpq_class c = prod[i];
            prod[i] = 0;
            for (int j = 0; j < n; ++j) prod[i - n + j] -= c * mpq_class(mod[j]);
        }
        prod.resize(n);
        return prod;
    }

    Elem inv(const Elem& a) const {
        GONAL_CHECK(!is_zero(a), "numberfield: division by zero");
        if (n == 1) return Elem{1 / a[0]};
        // extended Euclid in Q[t] against the modulus
        std::vector<mpq_class> r0(mod.size()), r1 = a;
        for (size_t i = 0; i < mod.size(); ++i) r0[i] = mpq_class(mod[i]);
        while (!r1.empty() && sgn(r1.back()) == 0) r1.pop_back();
        std::vector<mpq_class> t0, t1{mpq_class(1)};
        auto deg = [](const std::vector<mpq_class>& v) { return int(v.size()) - 1; };
        while (!r1.empty()) {
            std::vector<mpq_class> rem = r0, quo(std::max<size_t>(1, rem.size() - r1.size() + 1), mpq_class(0));
            mpq_class lcinv = 1 / r1.back();
            while (!rem.empty() && deg(rem) >= deg(r1)) {
                mpq_class c = rem.back() * lcinv;
                int shift = deg(rem) - deg(r1);
                quo[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i) rem[i + shift] -= c * r1[i];
                while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
            }
            std::vector<mpq_class> nt(std::max(t0.size(), quo.size() + t1.size()), mpq_class(0));
            for (size_t i = 0; i < t0.size(); ++i) nt[i] = t0[i];
            for (size_t i = 0; i < quo.size(); ++i) {
                if (sgn(quo[i]) == 0) continue;
                for (size_t j = 0; j < t1.size(); ++j) nt[i + j] -= quo[i] * t1[j];
            }
            while (!nt.empty() && sgn(nt.back()) == 0) nt.pop_back();
            t0 = t1;
            t1 = nt;
            r0 = r1;
            r1 = rem;
        }
        GONAL_CHECK(deg(r0) == 0, "numberfield: modulus not irreducible over Q");
        mpq_class c = 1 / r0[0];
        Elem res(n, mpq_class(0));
        for (size_t i = 0; i < t0.size(); ++i) res[i] = c * t0[i];
        return res;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_integral(const Elem& a) const {
        for (const auto& c : a)
            if (c.get_den() != 1) return false;
        return true;
    }

    std::string str(const Elem& a) const {
        if (n == 1) return a[0].get_str();
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += a[i].get_str();
        }
        return s + "]";
    }
};

}  // namespace gonal
