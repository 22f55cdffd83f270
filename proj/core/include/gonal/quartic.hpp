// Degree 4 covers: Lagrange cubic resolvent, the closed-form quadric pair of
// the quartic ring on naive bases, change of basis to reduced bases of the
// curve and of its resolvent, Schreyer invariants, and the liftable pair.
//
// Naive bases: 1, -f0 y^{-1}, y, y^2 for the curve and 1, w, w^2 + r2 w + r1
// for the resolvent k(x)[w]/(w^3 + r2 w^2 + r1 w + r0).  On these bases the
// resolvent map alpha -> alpha^(1) alpha^(2) + alpha^(3) alpha^(4) is the
// pair of symmetric matrices
//   [[f0, 0, f1/2], [0, 1, -f3/2], [f1/2, -f3/2, f2]]  (w component)
//   [[0, -1/2, f3/2], [-1/2, 0, 0], [f3/2, 0, 1]]      (w^2 + r2 w + r1 comp.)
// The reduced pair Q_1, Q_2 satisfies deg Q_l[i][j] <= e_i + e_j - b_l, with
// the Schreyer invariants b_l = (resolvent Maroni invariants) - 2.
#pragma once

#include <array>

#include "gonal/function_field.hpp"

namespace gonal {

template <class k>
struct QuadricModel {
    std::vector<Poly<k>> f;                 // monic model, ascending in y, size 5
    std::vector<Poly<k>> fres;              // cubic resolvent, ascending, size 4
    std::array<std::vector<Poly<k>>, 2> q;  // 3x3 symmetric matrices, row major
    std::vector<int64_t> e;                 // Maroni invariants, size 3
    std::vector<int64_t> b;                 // Schreyer invariants, size 2
    int64_t genus = 0;
};

// y^3 - b y^2 + (ac - 4d) y - (a^2 d + c^2 - 4bd) for f = y^4 + ay^3 + by^2 + cy + d
template <class k>
std::vector<Poly<k>> cubic_resolvent(const k& K, const std::vector<Poly<k>>& f) {
    GONAL_CHECK(f.size() == 5 && poly_eq(K, f[4], poly_one(K)),
                "quartic: resolvent needs a monic quartic");
    const Poly<k>&a = f[3], &b = f[2], &c = f[1], &d = f[0];
    std::vector<Poly<k>> r(4, poly_zero(K));
    r[3] = poly_one(K);
    r[2] = poly_neg(K, b);
    r[1] = poly_sub(K, poly_mul(K, a, c), poly_scale(K, K.from_int(4), d));
    Poly<k> s = poly_mul(K, poly_mul(K, a, a), d);
    s = poly_add(K, s, poly_mul(K, c, c));
    s = poly_sub(K, s, poly_scale(K, K.from_int(4), poly_mul(K, b, d)));
    r[0] = poly_neg(K, s);
    return r;
}

// the two matrices representing the resolvent map on the naive bases
template <class k>
std::array<std::vector<Poly<k>>, 2> naive_quadrics(const k& K, const std::vector<Poly<k>>& f) {
    GONAL_CHECK(f.size() == 5 && poly_eq(K, f[4], poly_one(K)),
                "quartic: quadrics need a monic quartic");
    if (K.is_zero(K.from_int(2))) throw gate_rejected("quartic: characteristic 2 is not supported");
    typename k::Elem half = K.inv(K.from_int(2));
    auto h = [&](const Poly<k>& p) { return poly_scale(K, half, p); };
    std::array<std::vector<Poly<k>>, 2> q;
    q[0].assign(9, poly_zero(K));
    q[1].assign(9, poly_zero(K));
    q[0][0] = f[0];
    q[0][2] = h(f[1]);
    q[0][4] = poly_one(K);
    q[0][5] = poly_neg(K, h(f[3]));
    q[0][6] = q[0][2];
    q[0][7] = q[0][5];
    q[0][8] = f[2];
    q[1][1] = poly_neg(K, h(poly_one(K)));
    q[1][2] = h(f[3]);
    q[1][3] = q[1][1];
    q[1][6] = q[1][2];
    q[1][8] = poly_one(K);
    return q;
}

inline int64_t quadric_degree_bound(const std::vector<int64_t>& e, const std::vector<int64_t>& b,
                                    int l, int i, int j) {
    return e[size_t(i)] + e[size_t(j)] - b[size_t(l)];
}

template <class k>
QuadricModel<k> bhargava_quadric_model(const k& K, const std::vector<Poly<k>>& fin) {
    GONAL_CHECK(fin.size() == 5, "quartic: input must have y-degree 4");
    if (K.is_zero(K.from_int(2))) throw gate_rejected("quartic: characteristic 2 is not supported");

    std::vector<Poly<k>> a = monicize_coeffs(K, fin);
    std::vector<Poly<k>> f = a;
    f.push_back(poly_one(K));

    CurveEq<k> C(K, a);
    if (C.discriminant_y(K).is_zero())
        throw degenerate_model("quartic: model is not separable in y");
    ReducedBasis<k> rb = reduced_basis(K, C);
    if (rb.zero_count != 1)
        throw degenerate_model("quartic: input is reducible or has a constant field extension");

    std::vector<Poly<k>> fres = cubic_resolvent(K, f);
    CurveEq<k> Cres(K, {fres[0], fres[1], fres[2]});
    if (Cres.discriminant_y(K).is_zero())
        throw gate_rejected("quartic: cubic resolvent is not separable");
    ReducedBasis<k> rbres = reduced_basis(K, Cres);
    if (rbres.zero_count != 1) throw gate_rejected("quartic: cubic resolvent is reducible");

    int64_t g = rb.genus;
    std::vector<int64_t> b{rbres.maroni[0] - 2, rbres.maroni[1] - 2};
    if (!(-1 <= b[0] && b[0] <= b[1] && b[0] + b[1] == g - 5))
        throw gate_rejected("quartic: resolvent invariants rule out a simply branched cover");

    RatFunField<k> R(K);
    // naive curve basis in y-power coordinates; -f0 y^{-1} = y^3 + f3 y^2 + f2 y + f1
    Mat<RatFunField<k>> N = mat_zero(R, 4, 4);
    N.at(0, 0) = R.one();
    N.at(1, 0) = R.from_poly(f[1]);
    N.at(1, 1) = R.from_poly(f[2]);
    N.at(1, 2) = R.from_poly(f[3]);
    N.at(1, 3) = R.one();
    N.at(2, 1) = R.one();
    N.at(3, 2) = R.one();

    // rows of A: naive coordinates of alpha_1..alpha_3, constant component dropped
    Mat<RatFunField<k>> A = mat_zero(R, 3, 3);
    for (size_t i = 1; i <= 3; ++i) {
        auto c = mat_solve_left(R, N, mat_row(rb.alpha, i));
        for (size_t j = 1; j <= 3; ++j) A.at(i - 1, j - 1) = c[j];
    }

    // B[l][c]: beta_{l+1}-coordinate of the naive resolvent element n_{c+1},
    // where n_1 = w and n_2 = w^2 + r2 w + r1
    Mat<RatFunField<k>> B = mat_zero(R, 2, 2);
    for (size_t c = 0; c < 2; ++c) {
        std::vector<typename RatFunField<k>::Elem> n(3, R.zero());
        if (c == 0)
            n[1] = R.one();
        else {
            n[0] = R.from_poly(fres[1]);
            n[1] = R.from_poly(fres[2]);
            n[2] = R.one();
        }
        auto z = mat_solve_left(R, rbres.alpha, n);
        B.at(0, c) = z[1];
        B.at(1, c) = z[2];
    }

    auto nq = naive_quadrics(K, f);
    std::array<Mat<RatFunField<k>>, 2> Qt{mat_zero(R, 3, 3), mat_zero(R, 3, 3)};
    for (size_t c = 0; c < 2; ++c) {
        Mat<RatFunField<k>> Qc = mat_zero(R, 3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) Qc.at(i, j) = R.from_poly(nq[c][3 * i + j]);
        Qt[c] = mat_mul(R, mat_mul(R, A, Qc), mat_transpose(R, A));
    }

    QuadricModel<k> out;
    out.f = f;
    out.fres = fres;
    out.e = rb.maroni;
    out.b = b;
    out.genus = g;
    for (size_t l = 0; l < 2; ++l) {
        out.q[l].assign(9, poly_zero(K));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                auto entry = R.add(R.mul(B.at(l, 0), Qt[0].at(i, j)),
                                   R.mul(B.at(l, 1), Qt[1].at(i, j)));
                GONAL_CHECK(R.is_poly(entry), "quartic: quadric entry has a denominator");
                out.q[l][3 * i + j] = R.to_poly(entry);
            }
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                GONAL_CHECK(poly_eq(K, out.q[l][3 * i + j], out.q[l][3 * j + i]),
                            "quartic: quadric matrix is not symmetric");
                int64_t bound = quadric_degree_bound(out.e, out.b, int(l), int(i), int(j));
                if (bound < 0)
                    GONAL_CHECK(out.q[l][3 * i + j].is_zero(),
                                "quartic: entry with negative degree bound is nonzero");
                else
                    GONAL_CHECK(out.q[l][3 * i + j].deg() <= bound,
                                "quartic: degree bound violated");
            }
    }
    return out;
}

// plane model from a pair: res_{y2}(q1(y1, y2, 1), q2(y1, y2, 1)) as ascending
// y1-coefficients with the k[x]-content removed; the y1-degree must be 4
template <class k>
std::vector<Poly<k>> quadric_plane_model(const k& K, const std::array<std::vector<Poly<k>>, 2>& q) {
    RatFunField<k> F(K);
    PolyRing1<RatFunField<k>> Ry(F);
    using E = Poly<RatFunField<k>>;

    Poly<k> two_k = poly_const(K, K.from_int(2));
    auto coeffs_y2 = [&](const std::vector<Poly<k>>& Q) {
        GONAL_CHECK(Q.size() == 9, "quartic: expected a 3x3 matrix");
        auto P = [&](int a_, int b_) { return Q[size_t(3 * a_ + b_)]; };
        auto lift = [&](std::vector<Poly<k>> cs) {
            std::vector<typename RatFunField<k>::Elem> v;
            for (auto& p : cs) v.push_back(F.from_poly(p));
            E e;
            e.c = std::move(v);
            poly_trim(F, e);
            return e;
        };
        std::vector<E> c(3);
        c[0] = lift({P(2, 2), poly_mul(K, two_k, P(0, 2)), P(0, 0)});
        c[1] = lift({poly_mul(K, two_k, P(1, 2)), poly_mul(K, two_k, P(0, 1))});
        c[2] = lift({P(1, 1)});
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        return c;
    };

    auto c1 = coeffs_y2(q[0]), c2 = coeffs_y2(q[1]);
    if (c1.empty() || c2.empty() || (c1.size() == 1 && c2.size() == 1))
        throw degenerate_model("quartic: pair does not determine a resultant in y2");
    E res = sylvester_resultant(Ry, c1, c2);
    if (res.deg() != 4) throw degenerate_model("quartic: resultant does not have y-degree 4");

    std::vector<Poly<k>> out(5, poly_zero(K));
    for (int i = 0; i <= 4; ++i) {
        auto e = poly_coeff(F, res, i);
        GONAL_CHECK(F.is_poly(e), "quartic: resultant coefficient has a denominator");
        out[size_t(i)] = F.to_poly(e);
    }
    Poly<k> content = out[4];
    for (int i = 0; i < 4; ++i)
        if (!out[size_t(i)].is_zero()) content = poly_gcd(K, content, out[size_t(i)]);
    if (content.deg() > 0)
        for (auto& p : out)
            if (!p.is_zero()) p = poly_div_exact(K, p, content);
    return out;
}

}  // namespace gonal
