// Sparse multivariate polynomials over a ring object.  Exponent vectors are
// packed into a single uint64 (6 bits per variable, at most 10 variables,
// variable 0 in the most significant lane), so term order = key order = lex.
// Every operation asserts that exponents stay below 64.
#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "gonal/util.hpp"

namespace gonal {

constexpr int kMPolyMaxVars = 10;
constexpr int kMPolyBits = 6;
constexpr uint64_t kMPolyLaneMask = (uint64_t(1) << kMPolyBits) - 1;

inline int mkey_shift(int v) { return kMPolyBits * (kMPolyMaxVars - 1 - v); }
inline uint64_t mkey_of_var(int v, int e) { return uint64_t(e) << mkey_shift(v); }
inline int mkey_get(uint64_t key, int v) { return int((key >> mkey_shift(v)) & kMPolyLaneMask); }
inline uint64_t mkey_set(uint64_t key, int v, int e) {
    key &= ~(kMPolyLaneMask << mkey_shift(v));
    return key | mkey_of_var(v, e);
}
inline int mkey_total(uint64_t key) {
    int t = 0;
    for (int v = 0; v < kMPolyMaxVars; ++v) t += mkey_get(key, v);
    return t;
}
inline bool mkey_divides(uint64_t a, uint64_t b) {
    // does monomial a divide monomial b
    for (int v = 0; v < kMPolyMaxVars; ++v)
        if (mkey_get(a, v) > mkey_get(b, v)) return false;
    return true;
}

template <class R>
struct MPoly {
    // sorted by key ascending, no zero coefficients
    std::vector<std::pair<uint64_t, typename R::Elem>> t;
    bool is_zero() const { return t.empty(); }
    size_t nterms() const { return t.size(); }
};

template <class R>
struct MPolyRing {
    using Coeff = typename R::Elem;
    const R& base;
    int nvars;
    MPolyRing(const R& b, int nv) : base(b), nvars(nv) {
        GONAL_CHECK(nv >= 1 && nv <= kMPolyMaxVars, "mpoly: bad variable count");
    }

    using Elem = MPoly<R>;

    Elem zero() const { return Elem{}; }
    Elem one() const { return constant(base.one()); }
    Elem constant(const Coeff& c) const {
        Elem e;
        if (!base.is_zero(c)) e.t.push_back({0, c});
        return e;
    }
    Elem var(int v, int e = 1) const {
        GONAL_CHECK(v < nvars && e < 64, "mpoly: bad variable/exponent");
        Elem r;
        r.t.push_back({mkey_of_var(v, e), base.one()});
        return r;
    }
    Elem term(const Coeff& c, uint64_t key) const {
        Elem r;
        if (!base.is_zero(c)) r.t.push_back({key, c});
        return r;
    }

    bool is_zero(const Elem& a) const { return a.t.empty(); }
    bool eq(const Elem& a, const Elem& b) const {
        if (a.t.size() != b.t.size()) return false;
        for (size_t i = 0; i < a.t.size(); ++i)
            if (a.t[i].first != b.t[i].first || !base.eq(a.t[i].second, b.t[i].second)) return false;
        return true;
    }

    void normalize(std::vector<std::pair<uint64_t, Coeff>>& v) const {
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        size_t w = 0;
        for (size_t i = 0; i < v.size();) {
            uint64_t key = v[i].first;
            Coeff acc = v[i].second;
            size_t j = i + 1;
            while (j < v.size() && v[j].first == key) {
                acc = base.add(acc, v[j].second);
                ++j;
            }
            if (!base.is_zero(acc)) v[w++] = {key, std::move(acc)};
            i = j;
        }
        v.resize(w);
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r;
        r.t.reserve(a.t.size() + b.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() || j < b.t.size()) {
            if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first))
                r.t.push_back(a.t[i++]);
            else if (i == a.t.size() || b.t[j].first < a.t[i].first)
                r.t.push_back(b.t[j++]);
            else {
                Coeff s = base.add(a.t[i].second, b.t[j].second);
                if (!base.is_zero(s)) r.t.push_back({a.t[i].first, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& tm : r.t) tm.second = base.neg(tm.second);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

    int total_deg(const Elem& a) const {
        int d = -1;
        for (const auto& tm : a.t) d = std::max(d, mkey_total(tm.first));
        return d;
    }
    int deg_in(const Elem& a, int v) const {
        int d = -1;
        for (const auto& tm : a.t) d = std::max(d, mkey_get(tm.first, v));
        return d;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (a.is_zero() || b.is_zero()) return Elem{};
        GONAL_CHECK(total_deg(a) + total_deg(b) < 64, "mpoly: exponent overflow");
        std::vector<std::pair<uint64_t, Coeff>> acc;
        acc.reserve(a.t.size() * b.t.size());
        for (const auto& ta : a.t)
            for (const auto& tb : b.t) acc.push_back({ta.first + tb.first, base.mul(ta.second, tb.second)});
        normalize(acc);
        Elem r;
        r.t = std::move(acc);
        return r;
    }

    Elem mul_coeff(const Coeff& c, const Elem& a) const {
        if (base.is_zero(c)) return Elem{};
        Elem r;
        r.t.reserve(a.t.size());
        for (const auto& tm : a.t) {
            Coeff p = base.mul(c, tm.second);
            if (!base.is_zero(p)) r.t.push_back({tm.first, std::move(p)});
        }
        return r;
    }

    // a * c * monomial(key)
    Elem mul_term(const Elem& a, const Coeff& c, uint64_t key) const {
        if (base.is_zero(c)) return Elem{};
        Elem r;
        r.t.reserve(a.t.size());
        for (const auto& tm : a.t) {
            Coeff p = base.mul(c, tm.second);
            if (!base.is_zero(p)) r.t.push_back({tm.first + key, std::move(p)});
        }
        return r;
    }

    Coeff coeff(const Elem& a, uint64_t key) const {
        auto it = std::lower_bound(a.t.begin(), a.t.end(), key,
                                   [](const auto& tm, uint64_t k) { return tm.first < k; });
        if (it != a.t.end() && it->first == key) return it->second;
        return base.zero();
    }

    // Coefficient of v^e, as a polynomial in the remaining variables.
    Elem coeff_of(const Elem& a, int v, int e) const {
        Elem r;
        for (const auto& tm : a.t)
            if (mkey_get(tm.first, v) == e) r.t.push_back({mkey_set(tm.first, v, 0), tm.second});
        return r;
    }

    // substitute variable v by s (Horner over the v-degree)
    Elem subst(const Elem& a, int v, const Elem& s) const {
        int d = deg_in(a, v);
        if (d < 1) return a;  // variable absent
        Elem acc;
        for (int e = d; e >= 0; --e) {
            if (e != d) acc = mul(acc, s);
            acc = add(acc, coeff_of(a, v, e));
        }
        return acc;
    }

    // full evaluation at ring points
    Coeff eval(const Elem& a, const std::vector<Coeff>& x) const {
        GONAL_CHECK(int(x.size()) >= nvars, "mpoly: eval arity");
        // memoized powers per variable
        std::vector<std::vector<Coeff>> pows(static_cast<size_t>(nvars));
        for (int v = 0; v < nvars; ++v) pows[v].push_back(base.one());
        Coeff total = base.zero();
        for (const auto& tm : a.t) {
            Coeff m = tm.second;
            for (int v = 0; v < nvars; ++v) {
                int e = mkey_get(tm.first, v);
                if (!e) continue;
                auto& pv = pows[v];
                while (int(pv.size()) <= e) pv.push_back(base.mul(pv.back(), x[size_t(v)]));
                m = base.mul(m, pv[size_t(e)]);
            }
            total = base.add(total, m);
        }
        return total;
    }

    // exact division (used by Bareiss); throws if not exact
    Elem divexact(const Elem& a, const Elem& b) const {
        GONAL_CHECK(!b.is_zero(), "mpoly: division by zero");
        Elem r = a, q;
        const auto& ltb = b.t.back();
        while (!r.is_zero()) {
            const auto& ltr = r.t.back();
            GONAL_CHECK(mkey_divides(ltb.first, ltr.first), "mpoly: division not exact (monomial)");
            Coeff c = base.divexact(ltr.second, ltb.second);
            uint64_t key = ltr.first - ltb.first;
            q.t.push_back({key, c});
            r = sub(r, mul_term(b, c, key));
        }
        std::reverse(q.t.begin(), q.t.end());
        return q;
    }

    std::string str(const Elem& a, const std::vector<std::string>& names) const {
        if (a.is_zero()) return "0";
        std::string s;
        for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += base.str(it->second);
            for (int v = 0; v < nvars; ++v) {
                int e = mkey_get(it->first, v);
                if (!e) continue;
                s += "*" + names[size_t(v)];
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }
    std::string str(const Elem& a) const {
        std::vector<std::string> names;
        for (int v = 0; v < nvars; ++v) names.push_back("v" + std::to_string(v));
        return str(a, names);
    }
};

}  // namespace gonal
