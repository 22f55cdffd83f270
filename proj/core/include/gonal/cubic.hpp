// Degree 3 covers: normalize a reduced basis of the maximal order, read the
// binary cubic form off the multiplication table (Delone-Faddeev), and emit
// the trigonal plane model together with integral bases for both patches.
//
// Multiplication table conventions for a normal basis 1, a1, a2:
//   a1 a2 = -g0,   a1^2 = -g1 + f2 a1 - f3 a2,   a2^2 = -g2 + f0 a1 - f1 a2
// with g0 = f0 f3, g1 = f1 f3, g2 = f0 f2 forced by associativity.  The model
// is f3 y^3 + f2 y^2 + f1 y + f0 and satisfies
//   deg f_i <= (i-1) e1 + (2-i) e2 + 2.
#pragma once

#include "gonal/function_field.hpp"

namespace gonal {

template <class k>
struct CubicTable {
    std::vector<Poly<k>> f;  // f[0..3], ascending
    std::vector<Poly<k>> g;  // g[0..2]
};

template <class k>
struct TrigonalModel {
    std::vector<Poly<k>> f;         // model coefficients, ascending in y, size 4
    std::vector<Poly<k>> f_recipr;  // patch at infinity, reciprocals, size 4
    int64_t e1 = 0, e2 = 0, genus = 0;
    // integral basis rows in y-power coordinates of the (nonmonic) model:
    // 1, f3 y, f3 y^2 + f2 y + f1; same shape with reciprocals at infinity
    std::vector<std::vector<Poly<k>>> basis_finite;
    std::vector<std::vector<Poly<k>>> basis_infinite;
};

// degree bound for the coefficient of y^i in the trigonal model
inline int64_t trigonal_degree_bound(int64_t e1, int64_t e2, int i) {
    return (i - 1) * e1 + (2 - i) * e2 + 2;
}

// shift alpha_1, alpha_2 by scalars so that alpha_1 alpha_2 lies in k[x];
// alpha rows are 1, alpha_1, alpha_2 in y-power coordinates
template <class k>
void normalize_cubic_rows(const k& K, const CurveEq<k>& C, Mat<RatFunField<k>>& alpha) {
    RatFunField<k> R(K);
    GONAL_CHECK(C.d == 3 && alpha.m == 3, "cubic: basis must have three rows");
    GONAL_CHECK(R.eq(alpha.at(0, 0), R.one()) && R.is_zero(alpha.at(0, 1)) && R.is_zero(alpha.at(0, 2)),
                "cubic: first basis row is not 1");
    auto prod = mul_coords_in_field(R, C, mat_row(alpha, 1), mat_row(alpha, 2));
    auto c = mat_solve_left(R, alpha, prod);  // a1 a2 = c[0] + c[1] a1 + c[2] a2
    GONAL_CHECK(R.is_poly(c[1]) && R.is_poly(c[2]), "cubic: product has non-integral coordinates");
    alpha.at(1, 0) = R.sub(alpha.at(1, 0), c[2]);
    alpha.at(2, 0) = R.sub(alpha.at(2, 0), c[1]);
}

template <class k>
CubicTable<k> delone_faddeev_table(const k& K, const CurveEq<k>& C, const Mat<RatFunField<k>>& alpha) {
    RatFunField<k> R(K);
    auto coords_of = [&](const std::vector<typename RatFunField<k>::Elem>& u,
                         const std::vector<typename RatFunField<k>::Elem>& v) {
        auto w = mat_solve_left(R, alpha, mul_coords_in_field(R, C, u, v));
        std::vector<Poly<k>> out;
        for (const auto& e : w) {
            GONAL_CHECK(R.is_poly(e), "cubic: table coordinate not in k[x]");
            out.push_back(R.to_poly(e));
        }
        return out;
    };
    auto r1 = mat_row(alpha, 1), r2 = mat_row(alpha, 2);
    auto sq1 = coords_of(r1, r1);
    auto sq2 = coords_of(r2, r2);
    auto pr = coords_of(r1, r2);
    GONAL_CHECK(pr[1].is_zero() && pr[2].is_zero(), "cubic: basis is not normal");

    CubicTable<k> t;
    t.f.assign(4, poly_zero(K));
    t.g.assign(3, poly_zero(K));
    t.f[2] = sq1[1];
    t.f[3] = poly_neg(K, sq1[2]);
    t.f[0] = sq2[1];
    t.f[1] = poly_neg(K, sq2[2]);
    t.g[0] = poly_neg(K, pr[0]);
    t.g[1] = poly_neg(K, sq1[0]);
    t.g[2] = poly_neg(K, sq2[0]);
    GONAL_CHECK(poly_eq(K, t.g[0], poly_mul(K, t.f[0], t.f[3])) &&
                    poly_eq(K, t.g[1], poly_mul(K, t.f[1], t.f[3])) &&
                    poly_eq(K, t.g[2], poly_mul(K, t.f[0], t.f[2])),
                "cubic: multiplication table is not associative");
    return t;
}

template <class k>
TrigonalModel<k> trigonal_model(const k& K, const std::vector<Poly<k>>& fin) {
    GONAL_CHECK(fin.size() == 4, "cubic: input must have y-degree 3");
    CurveEq<k> C(K, monicize_coeffs(K, fin));
    ReducedBasis<k> rb = reduced_basis(K, C);
    if (rb.zero_count != 1)
        throw degenerate_model("cubic: input is reducible or has a constant field extension");

    Mat<RatFunField<k>> alpha = rb.alpha;
    normalize_cubic_rows(K, C, alpha);
    CubicTable<k> t = delone_faddeev_table(K, C, alpha);
    GONAL_CHECK(!t.f[3].is_zero(), "cubic: degenerate form");

    TrigonalModel<k> out;
    out.f = t.f;
    out.e1 = rb.maroni[0];
    out.e2 = rb.maroni[1];
    out.genus = rb.genus;
    out.f_recipr.assign(4, poly_zero(K));
    for (int i = 0; i <= 3; ++i) {
        int64_t bound = trigonal_degree_bound(out.e1, out.e2, i);
        GONAL_CHECK(out.f[size_t(i)].deg() <= bound, "cubic: degree bound violated");
        if (!out.f[size_t(i)].is_zero())
            out.f_recipr[size_t(i)] = poly_reciprocal(K, out.f[size_t(i)], int(bound));
    }

    // the output is a model of the same cover; recompute its invariants
    ReducedBasis<k> check = reduced_basis(K, CurveEq<k>(K, monicize_coeffs(K, out.f)));
    GONAL_CHECK(check.zero_count == 1 && check.genus == rb.genus && check.maroni == rb.maroni,
                "cubic: output model invariants disagree with the input");

    auto bases = [&](const std::vector<Poly<k>>& f) {
        std::vector<std::vector<Poly<k>>> b(3, std::vector<Poly<k>>(3, poly_zero(K)));
        b[0][0] = poly_one(K);
        b[1][1] = f[3];
        b[2][0] = f[1];
        b[2][1] = f[2];
        b[2][2] = f[3];
        return b;
    };
    out.basis_finite = bases(out.f);
    out.basis_infinite = bases(out.f_recipr);
    return out;
}

}  // namespace gonal
