// Lifting models between a finite tower F_q = F_p[t]/(mbar) and its
// characteristic zero companion K = Q[t]/(m), where m is the coefficientwise
// centered lift of mbar; p stays inert, so Z[t]/(m) reduces onto F_q and both
// directions are exact on p-integral elements.  Also: elimination of the
// 5x5 alternating quintic model to a plane equation, and monicization of
// plane models with their discriminant data.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "gonal/fq.hpp"
#include "gonal/fq_factor.hpp"
#include "gonal/function_field.hpp"
#include "gonal/matrix.hpp"
#include "gonal/multipoly.hpp"
#include "gonal/numberfield.hpp"
#include "gonal/order.hpp"
#include "gonal/poly.hpp"
#include "gonal/ratfun.hpp"
#include "gonal/ring.hpp"
#include "gonal/util.hpp"

namespace gonal {

struct FieldTower {
    FqField F;
    NumberFieldQ K;
};

// centered lift of the modulus: coefficients in (-p/2, p/2]
inline FieldTower make_tower(int64_t p, const std::vector<int64_t>& mbar = {0, 1}) {
    FqField F(p, mbar);
    std::vector<mpz_class> m(F.mod.size());
    for (size_t i = 0; i + 1 < F.mod.size(); ++i) m[i] = F.fp.centered(F.mod[i]);
    m.back() = 1;
    NumberFieldQ K(std::move(m));
    return FieldTower{std::move(F), std::move(K)};
}

inline NumberFieldQ::Elem lift_elem(const FieldTower& T, const FqField::Elem& a) {
    NumberFieldQ::Elem r(size_t(T.K.n), mpq_class(0));
    GONAL_CHECK(int(a.size()) == T.K.n, "tower: element length mismatch");
    for (size_t i = 0; i < a.size(); ++i) r[i] = mpq_class(T.F.fp.centered(a[i]));
    return r;
}

// defined whenever no denominator is divisible by p
inline FqField::Elem reduce_elem(const FieldTower& T, const NumberFieldQ::Elem& a) {
    unsigned long p = static_cast<unsigned long>(T.F.fp.p);
    GONAL_CHECK(int(a.size()) == T.K.n, "tower: element length mismatch");
    FqField::Elem r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t den = int64_t(mpz_fdiv_ui(a[i].get_den().get_mpz_t(), p));
        if (den == 0) throw degenerate_model("tower: reduction hits a denominator divisible by p");
        int64_t num = int64_t(mpz_fdiv_ui(a[i].get_num().get_mpz_t(), p));
        r[i] = T.F.fp.mul(num, T.F.fp.inv(den));
    }
    return r;
}

inline Poly<NumberFieldQ> lift_poly(const FieldTower& T, const Poly<FqField>& a) {
    Poly<NumberFieldQ> r;
    r.c.reserve(a.c.size());
    for (const auto& ci : a.c) r.c.push_back(lift_elem(T, ci));
    poly_trim(T.K, r);
    return r;
}

inline Poly<FqField> reduce_poly(const FieldTower& T, const Poly<NumberFieldQ>& a) {
    Poly<FqField> r;
    r.c.reserve(a.c.size());
    for (const auto& ci : a.c) r.c.push_back(reduce_elem(T, ci));
    poly_trim(T.F, r);
    return r;
}

inline std::vector<Poly<NumberFieldQ>> lift_coeff_list(const FieldTower& T,
                                                       const std::vector<Poly<FqField>>& f) {
    std::vector<Poly<NumberFieldQ>> r;
    r.reserve(f.size());
    for (const auto& fi : f) r.push_back(lift_poly(T, fi));
    return r;
}

inline std::vector<Poly<FqField>> reduce_coeff_list(const FieldTower& T,
                                                    const std::vector<Poly<NumberFieldQ>>& f) {
    std::vector<Poly<FqField>> r;
    r.reserve(f.size());
    for (const auto& fi : f) r.push_back(reduce_poly(T, fi));
    return r;
}

template <class k>
std::vector<Poly<k>> normalize_plane_model(const k& K, std::vector<Poly<k>> f);

// Reduce a characteristic zero plane model mod p.  The list is first rescaled
// by the unit of K that makes the full coefficient vector coprime integral,
// so reduction is defined and not identically zero; the residue side is then
// renormalized.  Canonical lists of the same curve on both sides agree.
inline std::vector<Poly<FqField>> reduce_plane_model(const FieldTower& T,
                                                     const std::vector<Poly<NumberFieldQ>>& f) {
    std::vector<NumberFieldQ::Elem> flat;
    for (const auto& fi : f)
        for (const auto& c : fi.c) flat.push_back(c);
    T.K.strip_content(flat);
    size_t w = 0;
    std::vector<Poly<FqField>> out;
    out.reserve(f.size());
    for (const auto& fi : f) {
        Poly<FqField> r;
        for (size_t i = 0; i < fi.c.size(); ++i) r.c.push_back(reduce_elem(T, flat[w++]));
        poly_trim(T.F, r);
        out.push_back(std::move(r));
    }
    if (out.back().is_zero()) throw degenerate_model("tower: leading y-coefficient vanishes mod p");
    return normalize_plane_model(T.F, std::move(out));
}

// lift the upper triangle including the diagonal and mirror, so the lifted
// pair is symmetric entry for entry
inline std::array<std::vector<Poly<NumberFieldQ>>, 2> lift_quadric_pair(
    const FieldTower& T, const std::array<std::vector<Poly<FqField>>, 2>& q) {
    std::array<std::vector<Poly<NumberFieldQ>>, 2> out;
    for (size_t l = 0; l < 2; ++l) {
        GONAL_CHECK(q[l].size() == 9, "lift: quadric matrices must be 3 by 3");
        out[l].assign(9, Poly<NumberFieldQ>{});
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i; j < 3; ++j) {
                Poly<NumberFieldQ> u = lift_poly(T, q[l][3 * i + j]);
                out[l][3 * j + i] = u;
                out[l][3 * i + j] = std::move(u);
            }
    }
    return out;
}

// lift the strict upper triangle and negate, so the lifted quadruple is
// alternating entry for entry
inline std::array<std::vector<Poly<NumberFieldQ>>, 4> lift_skew_quadruple(
    const FieldTower& T, const std::array<std::vector<Poly<FqField>>, 4>& m) {
    std::array<std::vector<Poly<NumberFieldQ>>, 4> out;
    for (size_t l = 0; l < 4; ++l) {
        GONAL_CHECK(m[l].size() == 25, "lift: alternating matrices must be 5 by 5");
        out[l].assign(25, Poly<NumberFieldQ>{});
        for (size_t i = 0; i < 5; ++i) {
            GONAL_CHECK(m[l][5 * i + i].is_zero(), "lift: diagonal entry is nonzero");
            for (size_t j = i + 1; j < 5; ++j) {
                Poly<NumberFieldQ> u = lift_poly(T, m[l][5 * i + j]);
                out[l][5 * j + i] = poly_neg(T.K, u);
                out[l][5 * i + j] = std::move(u);
            }
        }
    }
    return out;
}

// The five 4x4 sub-pfaffians of the 5x5 alternating matrix of linear forms
// M(Y) = sum_l m[l] Y_{l+1}; entry t deletes row and column t of M.  Sign
// fixed by pf = a01 a23 - a02 a13 + a03 a12 on the retained indices in
// increasing order; each pfaffian is certified against the determinant.
template <class k>
std::vector<MPoly<PolyRing1<k>>> pfaffians_4x4(const k& K,
                                               const std::array<std::vector<Poly<k>>, 4>& m) {
    PolyRing1<k> P1(K);
    MPolyRing<PolyRing1<k>> ps(P1, 4);
    using E = MPoly<PolyRing1<k>>;
    std::array<std::array<E, 5>, 5> a;
    for (size_t l = 0; l < 4; ++l)
        GONAL_CHECK(m[l].size() == 25, "pfaffian: matrices must be 5 by 5");
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            E s = ps.zero();
            for (int l = 0; l < 4; ++l)
                s = ps.add(s, ps.term(m[size_t(l)][5 * i + j], mkey_of_var(l, 1)));
            a[i][j] = std::move(s);
        }
    for (size_t i = 0; i < 5; ++i) {
        if (!ps.is_zero(a[i][i])) throw degenerate_model("pfaffian: diagonal entry is nonzero");
        for (size_t j = i + 1; j < 5; ++j)
            if (!ps.eq(a[j][i], ps.neg(a[i][j])))
                throw degenerate_model("pfaffian: matrix is not alternating");
    }
    std::vector<E> out;
    out.reserve(5);
    for (size_t t = 0; t < 5; ++t) {
        size_t idx[4];
        size_t w = 0;
        for (size_t i = 0; i < 5; ++i)
            if (i != t) idx[w++] = i;
        auto at = [&](size_t i, size_t j) -> const E& { return a[idx[i]][idx[j]]; };
        E pf = ps.sub(ps.mul(at(0, 1), at(2, 3)), ps.mul(at(0, 2), at(1, 3)));
        pf = ps.add(pf, ps.mul(at(0, 3), at(1, 2)));
        E det = ps.zero();
        int perm[4] = {0, 1, 2, 3};
        do {
            int inv = 0;
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    if (perm[u] > perm[v]) ++inv;
            E pr = ps.one();
            for (int u = 0; u < 4; ++u) pr = ps.mul(pr, at(size_t(u), size_t(perm[u])));
            det = (inv % 2 == 0) ? ps.add(det, pr) : ps.sub(det, pr);
        } while (std::next_permutation(perm, perm + 4));
        GONAL_CHECK(ps.eq(ps.mul(pf, pf), det), "pfaffian: square does not equal the determinant");
        out.push_back(std::move(pf));
    }
    return out;
}

// Scale a plane model by the unit of k(x) that makes it canonical: divide by
// the polynomial gcd of the coefficients and make the leading y-coefficient
// monic.  Two coefficient lists of the same curve differing by a k(x) factor
// become equal.
template <class k>
std::vector<Poly<k>> normalize_plane_model(const k& K, std::vector<Poly<k>> f) {
    GONAL_CHECK(f.size() >= 2, "plane model: empty coefficient list");
    if (f.back().is_zero()) throw degenerate_model("plane model: leading y-coefficient vanishes");
    Poly<k> g;
    for (const auto& fi : f) {
        if (fi.is_zero()) continue;
        g = g.is_zero() ? poly_monic(K, fi) : poly_gcd(K, g, fi);
        if (g.deg() == 0) break;
    }
    if (g.deg() > 0)
        for (auto& fi : f)
            if (!fi.is_zero()) fi = poly_div_exact(K, fi, g);
    typename k::Elem s = K.inv(poly_lc(K, f.back()));
    if (!K.eq(s, K.one()))
        for (auto& fi : f) fi = poly_scale(K, s, fi);
    return f;
}

// Eliminate the 5x5 alternating model to a plane equation for the degree 5
// cover.  On the chart Y_1 = 1 the five sub-pfaffian quadrics in (y1,y2,y3)
// over k(x) cut out the curve; a Macaulay matrix in degree D is reduced,
// leaving a 5-dimensional quotient spanned by standard monomials, and the
// minimal polynomial of multiplication by y1 on that quotient is the
// generator of the elimination ideal.  Membership in the ideal is genuine by
// construction (every row is a multiple of a quadric); reducibility of the
// output is caught by the irreducibility checks downstream.  Returns the
// canonical coefficient list, ascending in y, of y-degree exactly 5.
template <class k>
std::vector<Poly<k>> pfaffian_plane_model(const k& K,
                                          const std::array<std::vector<Poly<k>>, 4>& m) {
    PolyRing1<k> P1(K);
    MPolyRing<PolyRing1<k>> ps(P1, 4);
    using E = MPoly<PolyRing1<k>>;
    RatFunField<k> R(K);
    using RE = typename RatFunField<k>::Elem;
    std::vector<E> quad = pfaffians_4x4(K, m);
    for (auto& q : quad) q = ps.subst(q, 0, ps.one());
    for (const auto& q : quad)
        if (ps.is_zero(q)) throw degenerate_model("quintic model: a sub-pfaffian vanishes");

    for (int D = 3; D <= 4; ++D) {
        // columns: monomials y1^a y2^b y3^c of total degree <= D, high degree
        // first so row reduction pivots on high monomials and the standard
        // monomials collect at low degree
        std::vector<std::array<int, 3>> mono;
        for (int a = 0; a <= D; ++a)
            for (int b = 0; a + b <= D; ++b)
                for (int c = 0; a + b + c <= D; ++c) mono.push_back({a, b, c});
        std::sort(mono.begin(), mono.end(), [](const auto& x, const auto& y) {
            int tx = x[0] + x[1] + x[2], ty = y[0] + y[1] + y[2];
            if (tx != ty) return tx > ty;
            return x > y;
        });
        std::map<std::array<int, 3>, size_t> col;
        for (size_t j = 0; j < mono.size(); ++j) col[mono[j]] = j;

        // rows: u * q_i over all monomial multipliers u of degree <= D - 2
        std::vector<std::array<int, 3>> mult;
        for (const auto& e : mono)
            if (e[0] + e[1] + e[2] <= D - 2) mult.push_back(e);
        Mat<RatFunField<k>> A = mat_zero(R, mult.size() * quad.size(), mono.size());
        size_t rr = 0;
        for (const auto& u : mult)
            for (const auto& q : quad) {
                for (const auto& tm : q.t) {
                    std::array<int, 3> e = {mkey_get(tm.first, 1) + u[0],
                                            mkey_get(tm.first, 2) + u[1],
                                            mkey_get(tm.first, 3) + u[2]};
                    A.at(rr, col.at(e)) = R.from_poly(tm.second);
                }
                ++rr;
            }
        std::vector<size_t> piv = mat_rref(R, A);

        std::vector<size_t> standard;
        {
            std::vector<char> isp(mono.size(), 0);
            for (size_t pc : piv) isp[pc] = 1;
            for (size_t j = 0; j < mono.size(); ++j)
                if (!isp[j]) standard.push_back(j);
        }
        bool closed = standard.size() == 5;
        for (size_t j : standard)
            closed = closed && (mono[j][0] + mono[j][1] + mono[j][2] <= D - 1);
        if (!closed) {
            if (D < 4) continue;
            throw degenerate_model("quintic model: quadrics do not present a rank 5 quotient");
        }

        // normal form against the reduced rows; output is supported on the
        // standard monomials only
        auto nf = [&](std::vector<RE> v) {
            for (size_t r2 = 0; r2 < piv.size(); ++r2) {
                RE c = v[piv[r2]];
                if (R.is_zero(c)) continue;
                for (size_t j = 0; j < mono.size(); ++j)
                    if (!R.is_zero(A.at(r2, j))) v[j] = R.sub(v[j], R.mul(c, A.at(r2, j)));
            }
            return v;
        };

        std::vector<RE> v(mono.size(), R.zero());
        v[col.at({0, 0, 0})] = R.one();
        v = nf(std::move(v));
        Mat<RatFunField<k>> W = mat_zero(R, 0, mono.size());
        for (int step = 0; step <= 5; ++step) {
            W.m += 1;
            for (size_t j = 0; j < mono.size(); ++j) W.a.push_back(v[j]);
            Mat<RatFunField<k>> ker = mat_kernel(R, mat_transpose(R, W));
            if (ker.m > 0) {
                GONAL_CHECK(!R.is_zero(ker.at(0, size_t(step))),
                            "quintic model: dependency misses the newest power");
                if (step < 5)
                    throw degenerate_model("quintic model: eliminated equation has y-degree below 5");
                std::vector<RE> cf(5);
                RE lead = ker.at(0, 5);
                for (size_t r2 = 0; r2 < 5; ++r2) cf[r2] = R.div(ker.at(0, r2), lead);
                Poly<k> den = poly_one(K);
                for (const auto& c : cf) {
                    Poly<k> g = poly_gcd(K, den, c.den);
                    den = poly_mul(K, poly_div_exact(K, den, g), c.den);
                }
                std::vector<Poly<k>> out(6);
                out[5] = den;
                for (size_t r2 = 0; r2 < 5; ++r2)
                    out[r2] = poly_mul(K, cf[r2].num, poly_div_exact(K, den, cf[r2].den));
                return normalize_plane_model(K, std::move(out));
            }
            GONAL_CHECK(step < 5, "quintic model: six vectors independent in a rank 5 quotient");
            // advance: v <- nf(y1 * v); the shift stays inside the monomial
            // list because standard monomials have degree <= D - 1
            std::vector<RE> w(mono.size(), R.zero());
            for (size_t j = 0; j < mono.size(); ++j) {
                if (R.is_zero(v[j])) continue;
                std::array<int, 3> e = mono[j];
                e[0] += 1;
                w[col.at(e)] = v[j];
            }
            v = nf(std::move(w));
        }
    }
    throw degenerate_model("quintic model: quadrics do not present a rank 5 quotient");
}

// Independent cross-check for the pfaffian elimination: iterated Sylvester
// resultants, first in y3 for two pairs of quadrics, then in y2.  The result
// may contain extraneous factors; the check is that the eliminant divides it.
// The first combination with a nonzero iterated resultant decides; no value
// when every candidate combination degenerates.
template <class k>
std::optional<bool> pfaffian_resultant_oracle(const k& K,
                                              const std::array<std::vector<Poly<k>>, 4>& m,
                                              const std::vector<Poly<k>>& eliminant) {
    PolyRing1<k> P1(K);
    MPolyRing<PolyRing1<k>> ps(P1, 4);
    using E = MPoly<PolyRing1<k>>;
    RatFunField<k> R(K);
    using RE = typename RatFunField<k>::Elem;
    GONAL_CHECK(eliminant.size() == 6, "resultant oracle: eliminant must have y-degree 5");
    std::vector<E> quad = pfaffians_4x4(K, m);
    for (auto& q : quad) q = ps.subst(q, 0, ps.one());

    // resultant in y3 of two quadrics, by Leibniz over the Sylvester matrix
    // (entries are polynomials in y1, y2 over k[x])
    auto res_y3 = [&](const E& f, const E& g) -> E {
        int df = ps.deg_in(f, 3), dg = ps.deg_in(g, 3);
        if (df < 1 || dg < 1) return ps.zero();
        size_t N = size_t(df + dg);
        std::vector<E> S(N * N, ps.zero());
        for (int r = 0; r < dg; ++r)
            for (int i = 0; i <= df; ++i) S[size_t(r) * N + size_t(r + i)] = ps.coeff_of(f, 3, df - i);
        for (int r = 0; r < df; ++r)
            for (int i = 0; i <= dg; ++i)
                S[size_t(dg + r) * N + size_t(r + i)] = ps.coeff_of(g, 3, dg - i);
        std::vector<size_t> perm(N);
        for (size_t i = 0; i < N; ++i) perm[i] = i;
        E det = ps.zero();
        do {
            int inv = 0;
            for (size_t u = 0; u < N; ++u)
                for (size_t v2 = u + 1; v2 < N; ++v2)
                    if (perm[u] > perm[v2]) ++inv;
            E pr = ps.one();
            for (size_t u = 0; u < N && !ps.is_zero(pr); ++u) pr = ps.mul(pr, S[u * N + perm[u]]);
            det = (inv % 2 == 0) ? ps.add(det, pr) : ps.sub(det, pr);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };

    // view a polynomial in (y1, y2) over k[x] as a polynomial in y2 over the
    // ring k(x)[y1]
    PolyRing1<RatFunField<k>> RY(R);
    auto to_y2 = [&](const E& a) -> std::vector<Poly<RatFunField<k>>> {
        int d2 = ps.deg_in(a, 2);
        std::vector<Poly<RatFunField<k>>> out(size_t(d2 + 1));
        for (const auto& tm : a.t) {
            auto& pc = out[size_t(mkey_get(tm.first, 2))];
            int e1 = mkey_get(tm.first, 1);
            if (pc.deg() < e1) pc.c.resize(size_t(e1) + 1, R.zero());
            pc.c[size_t(e1)] = R.add(pc.c[size_t(e1)], R.from_poly(tm.second));
        }
        for (auto& pc : out) poly_trim(R, pc);
        return out;
    };

    Poly<RatFunField<k>> target;
    target.c.reserve(6);
    for (const auto& fi : eliminant) target.c.push_back(R.from_poly(fi));
    poly_trim(R, target);

    for (size_t a1 = 0; a1 < quad.size(); ++a1)
        for (size_t b1 = a1 + 1; b1 < quad.size(); ++b1)
            for (size_t a2 = 0; a2 < quad.size(); ++a2)
                for (size_t b2 = a2 + 1; b2 < quad.size(); ++b2) {
                    if (a1 == a2 && b1 == b2) continue;
                    E r1 = res_y3(quad[a1], quad[b1]);
                    E r2 = res_y3(quad[a2], quad[b2]);
                    if (ps.is_zero(r1) || ps.is_zero(r2)) continue;
                    if (ps.deg_in(r1, 2) < 1 || ps.deg_in(r2, 2) < 1) continue;
                    auto f2 = to_y2(r1);
                    auto g2 = to_y2(r2);
                    if (f2.back().is_zero() || g2.back().is_zero()) continue;
                    Poly<RatFunField<k>> res = sylvester_resultant(RY, f2, g2);
                    if (res.is_zero()) continue;
                    return poly_mod(R, res, target).is_zero();
                }
    return std::nullopt;
}

// plane model data around the monic form q(x, y) = f_d(x)^{d-1} f(x, y / f_d(x))
template <class k>
struct PlaneModel {
    std::vector<Poly<k>> pre;  // canonical model before monicization, ascending in y
    std::vector<Poly<k>> q;    // monic model, ascending in y, q.back() = 1
    Poly<k> delta;             // discriminant of q with respect to y
    Poly<k> r;                 // monic squarefree part of delta
};

template <class k>
PlaneModel<k> monicize_plane_model(const k& K, std::vector<Poly<k>> f) {
    GONAL_CHECK(f.size() >= 3, "plane model: y-degree must be at least 2");
    PlaneModel<k> out;
    out.pre = normalize_plane_model(K, std::move(f));
    size_t d = out.pre.size() - 1;
    std::vector<Poly<k>> a = monicize_coeffs(K, out.pre);
    // substitution identity a_j f_d^j = f_d^{d-1} f_j, checked per run
    const Poly<k>& fd = out.pre.back();
    Poly<k> fdj = poly_one(K);
    Poly<k> fdd = poly_one(K);
    for (size_t e = 0; e + 1 < d; ++e) fdd = poly_mul(K, fdd, fd);
    for (size_t j = 0; j < d; ++j) {
        GONAL_CHECK(poly_eq(K, poly_mul(K, a[j], fdj), poly_mul(K, fdd, out.pre[j])),
                    "plane model: monicization identity fails");
        fdj = poly_mul(K, fdj, fd);
    }
    out.q = a;
    out.q.push_back(poly_one(K));
    CurveEq<k> C(K, a);
    out.delta = C.discriminant_y(K);
    if (out.delta.is_zero()) throw degenerate_model("plane model: y-discriminant vanishes");
    if constexpr (k::char_zero) {
        Poly<k> dd = poly_derivative(K, out.delta);
        out.r = poly_monic(K, poly_div_exact(K, out.delta, poly_gcd(K, out.delta, dd)));
    } else {
        out.r = fq_squarefree_part(K, out.delta);
    }
    return out;
}

}  // namespace gonal
