// Degree 5 covers: Cayley's sextic resolvent and the quadruple of 5x5
// alternating forms of the quintic ring, both specialized from precomputed
// polynomial data in the model coefficients, then moved to reduced bases.
//
// On the naive side the alternating forms pair the resolvent dual elements
// attached to rho^1..rho^5 and take values in the y-power basis of the curve
// function field.  The reduced quadruple conjugates by the trace-dual bases of
// both function fields, rescales by the determinant of the reduced curve
// basis, and keeps the components along the nonconstant curve duals.  Entries
// satisfy deg M_l[i][j] <= e_l + b_i + b_j + 6 - g with b the resolvent
// invariants b_i = g - 2 - e'_{6-i}.
#pragma once

#include <array>

#include "gonal/function_field.hpp"
#include "gonal/quintic_data.hpp"

namespace gonal {

template <class k>
struct PfaffianModel {
    std::vector<Poly<k>> f;                 // monic model, ascending in y, size 6
    std::vector<Poly<k>> fres;              // sextic resolvent, ascending, size 7
    std::array<std::vector<Poly<k>>, 4> m;  // 5x5 alternating matrices, row major
    std::vector<int64_t> e;                 // Maroni invariants, size 4
    std::vector<int64_t> b;                 // resolvent Schreyer invariants, size 5
    int64_t genus = 0;
};

template <class k>
std::vector<Poly<k>> cayley_sextic_from_table(const k& K, const QuinticPrecomputation& D,
                                              const FPowerTable<k>& T) {
    std::vector<Poly<k>> r(7, poly_zero(K));
    r[6] = poly_one(K);
    for (int j = 0; j <= 5; ++j) r[size_t(j)] = eval_fpoly(K, D.res[size_t(j)], T);
    return r;
}

// resolvent sextic of a monic quintic, ascending coefficients
template <class k>
std::vector<Poly<k>> cayley_sextic(const k& K, const QuinticPrecomputation& D,
                                   const std::vector<Poly<k>>& f) {
    GONAL_CHECK(f.size() == 6 && poly_eq(K, f[5], poly_one(K)),
                "quintic: resolvent needs a monic quintic");
    std::array<Poly<k>, 5> fc{f[0], f[1], f[2], f[3], f[4]};
    FPowerTable<k> T = fpower_table(K, fc, 24);
    return cayley_sextic_from_table(K, D, T);
}

inline int64_t pfaffian_degree_bound(const std::vector<int64_t>& e, const std::vector<int64_t>& b,
                                     int64_t g, int l, int i, int j) {
    return e[size_t(l)] + b[size_t(i)] + b[size_t(j)] + 6 - g;
}

template <class k>
PfaffianModel<k> bhargava_pfaffian_model(const k& K, const QuinticPrecomputation& D,
                                         const std::vector<Poly<k>>& fin) {
    GONAL_CHECK(fin.size() == 6, "quintic: input must have y-degree 5");
    if (K.is_zero(K.from_int(2)) || K.is_zero(K.from_int(3)))
        throw gate_rejected("quintic: characteristics 2 and 3 are not supported");

    std::vector<Poly<k>> a = monicize_coeffs(K, fin);
    std::vector<Poly<k>> f = a;
    f.push_back(poly_one(K));

    CurveEq<k> C(K, a);
    if (C.discriminant_y(K).is_zero())
        throw degenerate_model("quintic: model is not separable in y");
    ReducedBasis<k> rb = reduced_basis(K, C);
    if (rb.zero_count != 1)
        throw degenerate_model("quintic: input is reducible or has a constant field extension");

    std::array<Poly<k>, 5> fc{a[0], a[1], a[2], a[3], a[4]};
    FPowerTable<k> T = fpower_table(K, fc, 46);

    std::vector<Poly<k>> fres = cayley_sextic_from_table(K, D, T);
    CurveEq<k> Cres(K, {fres[0], fres[1], fres[2], fres[3], fres[4], fres[5]});
    if (Cres.discriminant_y(K).is_zero())
        throw gate_rejected("quintic: sextic resolvent is not separable");
    ReducedBasis<k> rbres = reduced_basis(K, Cres);
    if (rbres.zero_count != 1) throw gate_rejected("quintic: sextic resolvent is reducible");

    int64_t g = rb.genus;
    std::vector<int64_t> b(5, 0);
    for (size_t t = 0; t < 5; ++t) b[t] = g - 2 - rbres.maroni[4 - t];
    bool ok = -1 <= b[0];
    for (size_t t = 0; t + 1 < 5; ++t) ok = ok && b[t] <= b[t + 1];
    ok = ok && b[0] + b[1] + b[2] + b[3] + b[4] == 2 * g - 12;
    if (!ok)
        throw gate_rejected("quintic: resolvent invariants rule out a simply branched cover");

    RatFunField<k> R(K);
    Mat<RatFunField<k>> dual6 = trace_dual_rows(K, Cres, rbres.alpha);
    Mat<RatFunField<k>> dual5 = trace_dual_rows(K, C, rb.alpha);

    // row i of P: rho-power coordinates 1..5 of the resolvent dual beta*_{5-i}
    Mat<RatFunField<k>> P = mat_zero(R, 5, 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t mm = 0; mm < 5; ++mm) P.at(i, mm) = dual6.at(5 - i, mm + 1);

    std::array<Mat<RatFunField<k>>, 5> Nt;
    for (int r = 0; r < 5; ++r) {
        Mat<RatFunField<k>> Mr = mat_zero(R, 5, 5);
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 5; ++j)
                Mr.at(i, j) = R.from_poly(eval_fpoly(K, D.m[size_t(r)][i][j], T));
        Nt[size_t(r)] = mat_mul(R, mat_mul(R, P, Mr), mat_transpose(R, P));
    }

    // re-express y-power values along the curve duals: component t of the pair
    // (i, j) is sum_r Nt[r][i][j] * inv(dual5)[r][t]
    Mat<RatFunField<k>> D5i = mat_inverse(R, dual5);
    typename RatFunField<k>::Elem lam = mat_det(R, rb.alpha);

    PfaffianModel<k> out;
    out.f = f;
    out.fres = fres;
    out.e = rb.maroni;
    out.b = b;
    out.genus = g;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) {
            auto comp0 = R.zero();
            for (size_t r = 0; r < 5; ++r)
                comp0 = R.add(comp0, R.mul(Nt[r].at(i, j), D5i.at(r, 0)));
            GONAL_CHECK(R.is_zero(comp0),
                        "quintic: image has a component along the trace dual of 1");
        }
    for (size_t l = 0; l < 4; ++l) {
        out.m[l].assign(25, poly_zero(K));
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 5; ++j) {
                auto comp = R.zero();
                for (size_t r = 0; r < 5; ++r)
                    comp = R.add(comp, R.mul(Nt[r].at(i, j), D5i.at(r, l + 1)));
                comp = R.mul(lam, comp);
                GONAL_CHECK(R.is_poly(comp), "quintic: matrix entry has a denominator");
                out.m[l][5 * i + j] = R.to_poly(comp);
            }
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 5; ++j) {
                GONAL_CHECK(poly_eq(K, out.m[l][5 * i + j], poly_neg(K, out.m[l][5 * j + i])),
                            "quintic: matrix is not alternating");
                int64_t bound = pfaffian_degree_bound(out.e, out.b, g, int(l), int(i), int(j));
                if (bound < 0)
                    GONAL_CHECK(out.m[l][5 * i + j].is_zero(),
                                "quintic: entry with negative degree bound is nonzero");
                else
                    GONAL_CHECK(out.m[l][5 * i + j].deg() <= bound,
                                "quintic: degree bound violated");
            }
    }
    return out;
}

}  // namespace gonal
