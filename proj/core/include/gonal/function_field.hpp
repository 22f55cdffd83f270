// Two-patch analysis of the function field (or etale algebra) of a monic
// plane model F(x, y) = y^d + a_{d-1}(x) y^{d-1} + ... + a_0(x).
//
// The finite patch is Spec k[x]; the patch at infinity uses u = 1/x and
// z = y / x^e with e = max_i ceil(deg a_i / (d - i)).  A reduced basis of the
// finite maximal order against the infinite one yields the invariants
// r_1 >= ... >= r_d, the genus, the number of degree-zero rows (which counts
// the constants and detects reducibility or constant field extensions), and
// the scrollar invariants e_i = -r_i - 2.
#pragma once

#include <algorithm>

#include "gonal/order.hpp"
#include "gonal/ratfun.hpp"

namespace gonal {

template <class k>
struct InfinitePatch {
    CurveEq<k> curve;  // monic in z over k[u]
    int64_t e;
};

// coefficients of the monic model f_d^{d-1} f(x, y / f_d): a_j = f_j f_d^{d-1-j}
template <class k>
std::vector<Poly<k>> monicize_coeffs(const k& K, const std::vector<Poly<k>>& f) {
    int d = int(f.size()) - 1;
    GONAL_CHECK(d >= 2, "model: y-degree must be at least 2");
    GONAL_CHECK(!f[size_t(d)].is_zero(), "model: leading y-coefficient vanishes");
    std::vector<Poly<k>> a(static_cast<size_t>(d), poly_zero(K));
    for (int j = 0; j < d; ++j) {
        Poly<k> t = f[size_t(j)];
        for (int e = 0; e < d - 1 - j; ++e) t = poly_mul(K, t, f[size_t(d)]);
        a[size_t(j)] = t;
    }
    return a;
}

// product of two elements given in y-power coordinates with rational entries
template <class k>
std::vector<typename RatFunField<k>::Elem> mul_coords_in_field(
    const RatFunField<k>& R, const CurveEq<k>& C,
    const std::vector<typename RatFunField<k>::Elem>& u,
    const std::vector<typename RatFunField<k>::Elem>& v) {
    int d = C.d;
    std::vector<typename RatFunField<k>::Elem> raw(static_cast<size_t>(2 * d - 1), R.zero());
    for (int i = 0; i < d; ++i) {
        if (R.is_zero(u[size_t(i)])) continue;
        for (int j = 0; j < d; ++j) {
            if (R.is_zero(v[size_t(j)])) continue;
            raw[size_t(i + j)] = R.add(raw[size_t(i + j)], R.mul(u[size_t(i)], v[size_t(j)]));
        }
    }
    std::vector<typename RatFunField<k>::Elem> out(static_cast<size_t>(d), R.zero());
    for (int e = 0; e <= 2 * d - 2; ++e) {
        if (R.is_zero(raw[size_t(e)])) continue;
        for (int j = 0; j < d; ++j) {
            if (C.ypow[size_t(e)][size_t(j)].is_zero()) continue;
            out[size_t(j)] = R.add(out[size_t(j)],
                                   R.mul(raw[size_t(e)], R.from_poly(C.ypow[size_t(e)][size_t(j)])));
        }
    }
    return out;
}

template <class k>
int64_t infinite_shift(const k&, const CurveEq<k>& C) {
    int64_t e = 0;
    for (int i = 0; i < C.d; ++i) {
        if (C.a[size_t(i)].is_zero()) continue;
        int64_t need = (C.a[size_t(i)].deg() + (C.d - i) - 1) / (C.d - i);  // ceil
        e = std::max(e, need);
    }
    return e;
}

template <class k>
InfinitePatch<k> infinite_patch(const k& K, const CurveEq<k>& C) {
    int64_t e = infinite_shift(K, C);
    std::vector<Poly<k>> b(static_cast<size_t>(C.d), poly_zero(K));
    for (int i = 0; i < C.d; ++i) {
        if (C.a[size_t(i)].is_zero()) continue;
        int64_t E = e * (C.d - i);
        b[size_t(i)] = poly_reciprocal(K, C.a[size_t(i)], int(E));
    }
    return InfinitePatch<k>{CurveEq<k>(K, std::move(b)), e};
}

template <class k>
struct ReducedBasis {
    int d;
    int64_t e;                    // x-power shift used on the infinite patch
    std::vector<int64_t> r;       // sorted descending, length d
    int zero_count;               // rows with r = 0; 1 iff geometrically irreducible
    int64_t genus;                // -sum r - d + 1
    std::vector<int64_t> maroni;  // e_i = -r_{i+1} - 2 (ascending), length d-1
    Mat<RatFunField<k>> alpha;    // reduced basis rows in y-power coordinates
    OrderBasis<k> finite_order;
    OrderBasis<k> infinite_order;  // in z-power coordinates over k[u]
};

// substitute u = 1/x into p(u): returns p(1/x) as a rational function of x
template <class k>
typename RatFunField<k>::Elem subst_inv_x(const RatFunField<k>& R, const Poly<k>& p) {
    if (p.is_zero()) return R.zero();
    return R.make(poly_reciprocal(R.k, p, p.deg()), poly_xpow(R.k, p.deg()));
}

template <class k>
ReducedBasis<k> reduced_basis(const k& K, const CurveEq<k>& C) {
    int d = C.d;
    RatFunField<k> R(K);

    OrderBasis<k> Ofin = maximal_order(K, C);
    InfinitePatch<k> inf = infinite_patch(K, C);
    OrderBasis<k> Oinf = maximal_order(K, inf.curve);

    // finite basis rows in y-coordinates
    Mat<RatFunField<k>> alpha = mat_zero(R, static_cast<size_t>(d), static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            alpha.at(size_t(i), size_t(j)) =
                R.make(Ofin.M[size_t(i)][size_t(j)], Ofin.den);

    // infinite basis rows in y-coordinates: z^j = y^j x^(-e j), u = 1/x
    Mat<RatFunField<k>> Ainf = mat_zero(R, static_cast<size_t>(d), static_cast<size_t>(d));
    auto den_inf = subst_inv_x(R, Oinf.den);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto entry = subst_inv_x(R, Oinf.M[size_t(i)][size_t(j)]);
            entry = R.div(entry, den_inf);
            entry = R.div(entry, R.from_poly(poly_xpow(K, int(inf.e) * j)));
            Ainf.at(size_t(i), size_t(j)) = entry;
        }

    Mat<RatFunField<k>> T = mat_mul(R, alpha, mat_inverse(R, Ainf));
    int64_t N = 0;
    for (size_t i = 0; i < T.m; ++i)
        for (size_t j = 0; j < T.n; ++j) {
            GONAL_CHECK(R.den_is_xpower(T.at(i, j)), "reduced basis: transition matrix not Laurent");
            N = std::max(N, int64_t(T.at(i, j).den.deg()));
        }

    // S = x^N T is a polynomial matrix; row-reduce until the leading
    // coefficient matrix is invertible, mirroring the operations on alpha
    std::vector<std::vector<Poly<k>>> S(static_cast<size_t>(d), std::vector<Poly<k>>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& t = T.at(size_t(i), size_t(j));
            S[size_t(i)][size_t(j)] =
                poly_mul(K, t.num, poly_xpow(K, int(N - t.den.deg())));
        }

    auto row_deg = [&](size_t i) {
        int64_t m = -1;
        for (int j = 0; j < d; ++j) m = std::max(m, int64_t(S[i][size_t(j)].deg()));
        return m;
    };
    std::vector<int64_t> delta(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        delta[size_t(i)] = row_deg(size_t(i));
        GONAL_CHECK(delta[size_t(i)] >= 0, "reduced basis: zero row in transition matrix");
    }

    for (int guard = 0;; ++guard) {
        GONAL_CHECK(guard < 100000, "reduced basis: reduction did not terminate");
        Mat<k> lc = mat_zero(K, static_cast<size_t>(d), static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                lc.at(size_t(i), size_t(j)) = poly_coeff(K, S[size_t(i)][size_t(j)], int(delta[size_t(i)]));
        Mat<k> kerT = mat_kernel(K, mat_transpose(K, lc));  // rows v with v lc = 0
        if (kerT.m == 0) break;
        // combine into the participating row of largest degree (largest index on ties)
        size_t m = 0;
        bool found = false;
        for (int i = 0; i < d; ++i) {
            if (K.is_zero(kerT.at(0, size_t(i)))) continue;
            if (!found || delta[size_t(i)] >= delta[m]) m = size_t(i);
            found = true;
        }
        GONAL_CHECK(found, "reduced basis: empty kernel row");
        typename k::Elem scale = K.inv(kerT.at(0, m));
        for (int i = 0; i < d; ++i) {
            if (size_t(i) == m || K.is_zero(kerT.at(0, size_t(i)))) continue;
            typename k::Elem c = K.mul(scale, kerT.at(0, size_t(i)));
            Poly<k> shift = poly_scale(K, c, poly_xpow(K, int(delta[m] - delta[size_t(i)])));
            for (int j = 0; j < d; ++j)
                S[m][size_t(j)] = poly_add(K, S[m][size_t(j)], poly_mul(K, shift, S[size_t(i)][size_t(j)]));
            auto shiftR = R.from_poly(shift);
            for (int j = 0; j < d; ++j)
                alpha.at(m, size_t(j)) =
                    R.add(alpha.at(m, size_t(j)), R.mul(shiftR, alpha.at(size_t(i), size_t(j))));
        }
        int64_t nd = row_deg(m);
        GONAL_CHECK(nd >= 0 && nd < delta[m], "reduced basis: row degree did not drop");
        delta[m] = nd;
    }

    // r_i = N - delta_i, sorted descending (stable on original index)
    std::vector<size_t> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) idx[size_t(i)] = size_t(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return delta[a] < delta[b]; });

    ReducedBasis<k> out{d, inf.e, {}, 0, 0, {}, mat_zero(R, static_cast<size_t>(d), static_cast<size_t>(d)),
                        std::move(Ofin), std::move(Oinf)};
    for (int i = 0; i < d; ++i) {
        out.r.push_back(N - delta[idx[size_t(i)]]);
        for (int j = 0; j < d; ++j) out.alpha.at(size_t(i), size_t(j)) = alpha.at(idx[size_t(i)], size_t(j));
    }
    // normalize each row by the first nonzero leading coefficient
    for (int i = 0; i < d; ++i) {
        typename k::Elem s = K.zero();
        for (int j = 0; j < d; ++j) {
            const auto& p = S[idx[size_t(i)]][size_t(j)];
            auto c = poly_coeff(K, p, int(delta[idx[size_t(i)]]));
            if (!K.is_zero(c)) {
                s = K.inv(c);
                break;
            }
        }
        GONAL_CHECK(!K.is_zero(s), "reduced basis: zero leading row");
        auto sR = R.from_poly(poly_const(K, s));
        for (int j = 0; j < d; ++j)
            out.alpha.at(size_t(i), size_t(j)) = R.mul(sR, out.alpha.at(size_t(i), size_t(j)));
    }

    int64_t sum = 0;
    for (int64_t ri : out.r) {
        sum += ri;
        if (ri == 0) ++out.zero_count;
    }
    out.genus = -sum - d + 1;
    for (int i = 1; i < d; ++i) out.maroni.push_back(-out.r[size_t(i)] - 2);

    // a degree-zero row representing a constant is rescaled to exactly 1
    for (int i = 0; i < d; ++i) {
        if (out.r[size_t(i)] != 0) continue;
        const auto& head = out.alpha.at(size_t(i), 0);
        bool constant = R.is_poly(head) && head.num.deg() == 0 && !R.is_zero(head);
        for (int j = 1; constant && j < d; ++j)
            if (!R.is_zero(out.alpha.at(size_t(i), size_t(j)))) constant = false;
        if (!constant) continue;
        auto s = R.inv(head);
        for (int j = 0; j < d; ++j)
            out.alpha.at(size_t(i), size_t(j)) = R.mul(s, out.alpha.at(size_t(i), size_t(j)));
    }
    return out;
}

// traces of y^k for k = 0..count (values in k[x] by Newton's identities)
template <class k>
std::vector<Poly<k>> newton_traces(const k& K, const CurveEq<k>& C, int count) {
    int d = C.d;
    std::vector<Poly<k>> p(static_cast<size_t>(count) + 1, poly_zero(K));
    p[0] = poly_const(K, K.from_int(d));
    for (int m = 1; m <= count; ++m) {
        // p_m + sum_{i=1}^{min(m-1,d)} a_{d-i} p_{m-i} + [m <= d] m a_{d-m} = 0
        Poly<k> s = poly_zero(K);
        for (int i = 1; i < m && i <= d; ++i)
            s = poly_add(K, s, poly_mul(K, C.a[size_t(d - i)], p[size_t(m - i)]));
        if (m <= d) s = poly_add(K, s, poly_scale(K, K.from_int(m), C.a[size_t(d - m)]));
        p[size_t(m)] = poly_neg(K, s);
    }
    return p;
}

// dual rows D with Tr(basis_i * D_j) = delta_ij; basis rows in y-coordinates
template <class k>
Mat<RatFunField<k>> trace_dual_rows(const k& K, const CurveEq<k>& C, const Mat<RatFunField<k>>& basis) {
    int d = C.d;
    RatFunField<k> R(K);
    auto tr = newton_traces(K, C, 2 * d - 2);
    Mat<RatFunField<k>> G = mat_zero(R, static_cast<size_t>(d), static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            auto g = R.zero();
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    auto t = R.mul(basis.at(size_t(i), size_t(a)), basis.at(size_t(j), size_t(b)));
                    g = R.add(g, R.mul(t, R.from_poly(tr[size_t(a + b)])));
                }
            G.at(size_t(i), size_t(j)) = g;
            G.at(size_t(j), size_t(i)) = g;
        }
    return mat_mul(R, mat_inverse(R, G), basis);
}

}  // namespace gonal
