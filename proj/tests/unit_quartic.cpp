#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "gonal/fiber.hpp"
#include "gonal/multipoly.hpp"
#include "gonal/polytope.hpp"
#include "gonal/quartic.hpp"

using namespace gonal;

namespace {

Poly<FqField> from_map(const FqField& K, const std::map<int, int64_t>& m) {
    std::vector<FqField::Elem> c;
    for (const auto& [e, v] : m) {
        if (int(c.size()) <= e) c.resize(size_t(e) + 1, K.zero());
        c[size_t(e)] = K.from_int(v);
    }
    return poly_from(K, c);
}

template <class k>
Poly<k> from_ints(const k& K, const std::vector<int64_t>& c) {
    std::vector<typename k::Elem> v;
    for (int64_t x : c) v.push_back(K.from_int(x));
    return poly_from(K, v);
}

Poly<FqField> random_poly(const FqField& K, int maxdeg, rng64& rng) {
    std::vector<FqField::Elem> c;
    for (int j = 0; j <= maxdeg; ++j) c.push_back(K.random(rng));
    return poly_from(K, c);
}

bool mult_free(const FiberPattern& p) {
    for (const auto& [deg, mult] : p)
        if (mult > 1) return false;
    return true;
}

// two plane models of the same cover have equal factorization patterns at
// every x0 where both are admissible and both fibers are multiplicity free
// (distinct projections may identify points over multiple fibers)
int compare_fibers_mult_free(const FqField& K, const std::vector<Poly<FqField>>& a,
                             const std::vector<Poly<FqField>>& b) {
    REQUIRE(K.q_fits_u64());
    int compared = 0;
    for (uint64_t i = 0; i < K.q_u64(); ++i) {
        FqField::Elem x0 = K.from_int(int64_t(i % uint64_t(K.p())));
        if (K.n > 1) {
            uint64_t w = i;
            for (int j = 0; j < K.n; ++j, w /= uint64_t(K.p()))
                x0[size_t(j)] = int64_t(w % uint64_t(K.p()));
        }
        if (!fiber_admissible(K, a, x0) || !fiber_admissible(K, b, x0)) continue;
        FiberPattern pa = fiber_pattern(K, a, x0);
        FiberPattern pb = fiber_pattern(K, b, x0);
        if (!mult_free(pa) || !mult_free(pb)) continue;
        CHECK(pa == pb);
        ++compared;
    }
    return compared;
}

int64_t minkowski_of_pair(const FqField& K, const std::array<std::vector<Poly<FqField>>, 2>& q) {
    return minkowski_interior_count(quadric_support(K, q[0]), quadric_support(K, q[1]));
}

int64_t elem_val(const FqField::Elem& e) { return e.empty() ? 0 : e[0]; }

}  // namespace

TEST_CASE("minkowski interior count on explicit polytopes") {
    std::vector<SupportPoint3> cube;
    for (int64_t a = 0; a <= 1; ++a)
        for (int64_t b = 0; b <= 1; ++b)
            for (int64_t c = 0; c <= 1; ++c) cube.push_back({a, b, c});
    // [0,2]^3 has the single interior point (1,1,1)
    CHECK(minkowski_interior_count(cube, cube) == 1);

    std::vector<SupportPoint3> simplex{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    // 2 * conv(simplex) has the single interior point (1,1,1)
    CHECK(minkowski_interior_count(simplex, simplex) == 1);

    std::vector<SupportPoint3> seg{{0, 0, 0}, {1, 0, 0}};
    CHECK(minkowski_interior_count(seg, seg) == 0);
    CHECK(minkowski_interior_count(seg, cube) == 0);
}

TEST_CASE("cubic resolvent coefficients are the symmetric functions of the paired roots") {
    QField Q;
    MPolyRing<QField> M(Q, 4);
    using E = MPolyRing<QField>::Elem;
    std::array<E, 4> r{M.var(0), M.var(1), M.var(2), M.var(3)};

    E e1 = M.zero(), e2 = M.zero(), e3 = M.zero(), e4 = M.mul(M.mul(r[0], r[1]), M.mul(r[2], r[3]));
    for (int i = 0; i < 4; ++i) {
        e1 = M.add(e1, r[size_t(i)]);
        for (int j = i + 1; j < 4; ++j) {
            e2 = M.add(e2, M.mul(r[size_t(i)], r[size_t(j)]));
            for (int l = j + 1; l < 4; ++l)
                e3 = M.add(e3, M.mul(M.mul(r[size_t(i)], r[size_t(j)]), r[size_t(l)]));
        }
    }
    E rho1 = M.add(M.mul(r[0], r[1]), M.mul(r[2], r[3]));
    E rho2 = M.add(M.mul(r[0], r[2]), M.mul(r[1], r[3]));
    E rho3 = M.add(M.mul(r[0], r[3]), M.mul(r[1], r[2]));

    E four = M.constant(Q.from_int(4));
    // sum rho_i = e2
    CHECK(M.eq(M.add(M.add(rho1, rho2), rho3), e2));
    // sum rho_i rho_j = e1 e3 - 4 e4
    E s2 = M.add(M.add(M.mul(rho1, rho2), M.mul(rho1, rho3)), M.mul(rho2, rho3));
    CHECK(M.eq(s2, M.sub(M.mul(e1, e3), M.mul(four, e4))));
    // rho1 rho2 rho3 = e1^2 e4 + e3^2 - 4 e2 e4
    E s3 = M.mul(M.mul(rho1, rho2), rho3);
    E rhs = M.add(M.mul(M.mul(e1, e1), e4), M.mul(e3, e3));
    rhs = M.sub(rhs, M.mul(four, M.mul(e2, e4)));
    CHECK(M.eq(s3, rhs));
}

TEST_CASE("cubic resolvent on distinct monomial coefficients") {
    // f_j = x^{j+1} keeps the four coefficients independent
    QField Q;
    std::vector<Poly<QField>> f{from_ints(Q, {0, 1}), from_ints(Q, {0, 0, 1}),
                                from_ints(Q, {0, 0, 0, 1}), from_ints(Q, {0, 0, 0, 0, 1}),
                                poly_one(Q)};
    auto r = cubic_resolvent(Q, f);
    CHECK(poly_eq(Q, r[3], poly_one(Q)));
    CHECK(poly_eq(Q, r[2], poly_neg(Q, f[2])));
    // f1 f3 - 4 f0 = x^6 - 4x
    CHECK(poly_eq(Q, r[1], from_ints(Q, {0, -4, 0, 0, 0, 0, 1})));
    // -(f0 f3^2 + f1^2 - 4 f0 f2) = -x^9 + 3x^4
    CHECK(poly_eq(Q, r[0], from_ints(Q, {0, 0, 0, 0, 3, 0, 0, 0, 0, -1})));

    // biquadratic y^4 + b y^2 + d: resolvent y^3 - b y^2 - 4d y + 4bd
    FqField K(7);
    Poly<FqField> b = from_ints(K, {2, 0, 3}), d = from_ints(K, {1, 5});
    std::vector<Poly<FqField>> g{d, poly_zero(K), b, poly_zero(K), poly_one(K)};
    auto rb = cubic_resolvent(K, g);
    auto m4 = K.from_int(4);
    CHECK(poly_eq(K, rb[0], poly_scale(K, m4, poly_mul(K, b, d))));
    CHECK(poly_eq(K, rb[1], poly_scale(K, K.neg(m4), d)));
    CHECK(poly_eq(K, rb[2], poly_neg(K, b)));
}

TEST_CASE("naive quadric pair represents the resolvent map over a splitting field") {
    FqField K13(13);
    rng64 rng(20260814);
    int done = 0, attempts = 0;
    while (done < 10) {
        REQUIRE(++attempts < 300);
        int64_t A = int64_t(rng.below(13)), B = int64_t(rng.below(13));
        int64_t C = int64_t(rng.below(13)), D = 1 + int64_t(rng.below(12));
        Poly<FqField> fy = from_ints(K13, {D, C, B, A, 1});
        if (poly_gcd(K13, fy, poly_derivative(K13, fy)).deg() != 0) continue;

        std::vector<Poly<FqField>> f{poly_const(K13, K13.from_int(D)), poly_const(K13, K13.from_int(C)),
                                     poly_const(K13, K13.from_int(B)), poly_const(K13, K13.from_int(A)),
                                     poly_one(K13)};
        auto fres = cubic_resolvent(K13, f);
        Poly<FqField> ry = from_ints(K13, {elem_val(poly_coeff(K13, fres[0], 0)),
                                           elem_val(poly_coeff(K13, fres[1], 0)),
                                           elem_val(poly_coeff(K13, fres[2], 0)), 1});
        if (poly_gcd(K13, ry, poly_derivative(K13, ry)).deg() != 0) continue;

        int64_t L = 1;
        for (const auto& [h, mult] : fq_factor(K13, fy, 5)) L = std::lcm(L, int64_t(h.deg()));
        Poly<FqField> mp = fq_random_irreducible(K13, int(L), rng);
        std::vector<int64_t> limbs;
        for (int j = 0; j <= int(L); ++j) limbs.push_back(elem_val(poly_coeff(K13, mp, j)));
        FqField F(13, limbs);
        auto lift = [&](const Poly<FqField>& p) { return F.from_int(elem_val(poly_coeff(K13, p, 0))); };

        std::vector<FqField::Elem> fc;
        for (int j = 0; j <= 4; ++j) fc.push_back(F.from_int(elem_val(poly_coeff(K13, fy, j))));
        auto roots = fq_roots(F, poly_from(F, fc), 7);
        REQUIRE(roots.size() == 4);
        std::vector<FqField::Elem> rc;
        for (int j = 0; j <= 3; ++j) rc.push_back(F.from_int(elem_val(poly_coeff(K13, ry, j))));
        auto rroots = fq_roots(F, poly_from(F, rc), 7);
        REQUIRE(rroots.size() == 3);

        // resolvent roots are the three root pairings
        std::vector<FqField::Elem> rhos{
            F.add(F.mul(roots[0], roots[1]), F.mul(roots[2], roots[3])),
            F.add(F.mul(roots[0], roots[2]), F.mul(roots[1], roots[3])),
            F.add(F.mul(roots[0], roots[3]), F.mul(roots[1], roots[2]))};
        std::sort(rhos.begin(), rhos.end());
        std::sort(rroots.begin(), rroots.end());
        CHECK(rhos == rroots);

        // the pair evaluated on base coordinates gives the w and w^2+r2 w+r1
        // components of alpha^(1) alpha^(2) + alpha^(3) alpha^(4)
        auto nq = naive_quadrics(K13, f);
        std::array<std::array<FqField::Elem, 9>, 2> S;
        for (size_t c = 0; c < 2; ++c)
            for (size_t t = 0; t < 9; ++t) S[c][t] = lift(nq[c][t]);
        FqField::Elem rho = rhos.empty() ? F.zero() : F.zero();
        rho = F.add(F.mul(roots[0], roots[1]), F.mul(roots[2], roots[3]));
        FqField::Elem n2 = F.add(F.add(F.mul(rho, rho), F.mul(lift(fres[2]), rho)), lift(fres[1]));
        FqField::Elem negd = F.neg(F.from_int(D));
        for (int trial = 0; trial < 6; ++trial) {
            std::array<FqField::Elem, 3> u{F.from_int(int64_t(rng.below(13))),
                                           F.from_int(int64_t(rng.below(13))),
                                           F.from_int(int64_t(rng.below(13)))};
            std::array<FqField::Elem, 4> al;
            for (size_t i = 0; i < 4; ++i) {
                FqField::Elem a = F.mul(u[0], F.mul(negd, F.inv(roots[i])));
                a = F.add(a, F.mul(u[1], roots[i]));
                al[i] = F.add(a, F.mul(u[2], F.mul(roots[i], roots[i])));
            }
            FqField::Elem v = F.add(F.mul(al[0], al[1]), F.mul(al[2], al[3]));
            std::array<FqField::Elem, 2> s{F.zero(), F.zero()};
            for (size_t c = 0; c < 2; ++c)
                for (size_t i = 0; i < 3; ++i)
                    for (size_t j = 0; j < 3; ++j)
                        s[c] = F.add(s[c], F.mul(F.mul(u[i], S[c][3 * i + j]), u[j]));
            FqField::Elem c0 = F.sub(v, F.add(F.mul(s[0], rho), F.mul(s[1], n2)));
            // base coordinates leave a base field constant term
            for (size_t idx = 1; idx < c0.size(); ++idx) CHECK(c0[idx] == 0);
        }
        ++done;
    }
}

TEST_CASE("resultant of the naive pair recovers the quartic") {
    QField Q;
    MPolyRing<QField> M(Q, 6);  // f0 f1 f2 f3 y1 y2
    using E = MPolyRing<QField>::Elem;
    E f0 = M.var(0), f1 = M.var(1), f2 = M.var(2), f3 = M.var(3), y1 = M.var(4), y2 = M.var(5);
    auto resultant_y2 = [&](const E& a, const E& b) {
        std::vector<E> av, bv;
        for (int e = 0; e <= M.deg_in(a, 5); ++e) av.push_back(M.coeff_of(a, 5, e));
        for (int e = 0; e <= M.deg_in(b, 5); ++e) bv.push_back(M.coeff_of(b, 5, e));
        return sylvester_resultant(M, av, bv);
    };

    // on the patch Y1 = 1 (y1 the y^2 coordinate, y2 the y coordinate) the
    // pair eliminates to the quartic itself
    E q1 = M.add(f0, M.mul(y2, y2));
    q1 = M.add(q1, M.mul(f2, M.mul(y1, y1)));
    q1 = M.add(q1, M.mul(f1, y1));
    q1 = M.sub(q1, M.mul(f3, M.mul(y1, y2)));
    E q2 = M.add(M.sub(M.mul(f3, y1), y2), M.mul(y1, y1));
    E expect = M.mul(y1, M.add(y1, f3));
    expect = M.add(M.mul(M.mul(y1, y1), expect), M.mul(f2, M.mul(y1, y1)));
    expect = M.add(expect, M.add(M.mul(f1, y1), f0));
    CHECK(M.eq(resultant_y2(q1, q2), expect));

    // on the patch Y3 = 1 the same pair eliminates to the reciprocal quartic
    E p1 = M.add(M.mul(f0, M.mul(y1, y1)), M.mul(y2, y2));
    p1 = M.add(p1, f2);
    p1 = M.add(p1, M.mul(f1, y1));
    p1 = M.sub(p1, M.mul(f3, y2));
    E p2 = M.add(M.sub(M.mul(f3, y1), M.mul(y1, y2)), M.one());
    E rexpect = M.mul(M.mul(y1, y1), M.add(M.mul(f0, M.mul(y1, y1)), M.mul(f1, y1)));
    rexpect = M.add(rexpect, M.mul(f2, M.mul(y1, y1)));
    rexpect = M.add(rexpect, M.add(M.mul(f3, y1), M.one()));
    CHECK(M.eq(resultant_y2(p1, p2), rexpect));

    // the frozen forms match the matrices on random specializations
    FqField K(13);
    rng64 rng(99);
    for (int t = 0; t < 5; ++t) {
        std::vector<int64_t> c{int64_t(rng.below(13)), int64_t(rng.below(13)),
                               int64_t(rng.below(13)), int64_t(rng.below(13)),
                               int64_t(rng.below(13)), int64_t(rng.below(13))};
        std::vector<Poly<FqField>> f;
        for (int j = 0; j < 4; ++j) f.push_back(poly_const(K, K.from_int(c[size_t(j)])));
        f.push_back(poly_one(K));
        auto nq = naive_quadrics(K, f);
        auto form_at = [&](size_t w, const std::array<int64_t, 3>& u) {
            FqField::Elem s = K.zero();
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j) {
                    auto e = poly_coeff(K, nq[w][3 * i + j], 0);
                    s = K.add(s, K.mul(K.mul(K.from_int(u[i]), e), K.from_int(u[j])));
                }
            return s;
        };
        std::vector<mpq_class> pt;
        for (int64_t x : c) pt.emplace_back(x);
        auto reduce = [&](const E& a) {
            mpq_class r = M.eval(a, pt);
            GONAL_CHECK(r.get_den() == 1, "test: expected an integer");
            return K.from_int(mpz_fdiv_ui(r.get_num().get_mpz_t(), 13));
        };
        // coordinates (Y1, Y2, Y3) are (1, y2, y1) on the first patch and
        // (y1, y2, 1) on the second
        CHECK(K.eq(reduce(q1), form_at(0, {1, c[5], c[4]})));
        CHECK(K.eq(reduce(q2), form_at(1, {1, c[5], c[4]})));
        CHECK(K.eq(reduce(p1), form_at(0, {c[4], c[5], 1})));
        CHECK(K.eq(reduce(p2), form_at(1, {c[4], c[5], 1})));
    }
}

TEST_CASE("genus 10 worked example over F7") {
    FqField K(7);
    std::vector<Poly<FqField>> f{
        from_map(K, {{40, 1}, {34, 6}, {33, 2}, {32, 3}, {31, 5}, {30, 6}, {28, 4}, {26, 2},
                     {24, 1}, {23, 1}, {22, 6}, {21, 6}, {19, 4}, {17, 6}, {16, 1}, {15, 5},
                     {14, 6}, {13, 3}, {12, 5}, {11, 4}, {10, 1}, {9, 2},  {8, 1},  {7, 5},
                     {6, 1},  {5, 3},  {4, 2},  {3, 1},  {2, 3},  {1, 1},  {0, 2}}),
        from_map(K, {{30, 4}, {24, 4}, {23, 6}, {22, 2}, {21, 1}, {20, 4}, {18, 1},
                     {16, 4}, {14, 2}, {13, 2}, {12, 5}, {11, 6}, {9, 4},  {7, 6},
                     {6, 1},  {5, 5},  {4, 6},  {3, 6},  {2, 2},  {1, 5},  {0, 5}}),
        from_map(K, {{20, 6}, {14, 4}, {13, 6}, {12, 2}, {11, 1}, {10, 4},
                     {8, 4},  {6, 2},  {4, 1},  {3, 1},  {2, 6}}),
        from_map(K, {{10, 4}, {4, 6}, {3, 2}, {2, 3}, {1, 5}, {0, 6}}),
        poly_one(K),
    };
    QuadricModel<FqField> qm = bhargava_quadric_model(K, f);
    CHECK(qm.genus == 10);
    CHECK(qm.e == std::vector<int64_t>{1, 2, 4});
    CHECK(qm.b == std::vector<int64_t>{2, 3});

    // published pair for the same cover, from another reduced basis
    std::array<std::vector<Poly<FqField>>, 2> pub;
    {
        Poly<FqField> m01 = from_map(K, {{1, 4}, {0, 4}});
        Poly<FqField> m02 = from_map(K, {{3, 2}, {2, 5}, {1, 4}, {0, 5}});
        Poly<FqField> m12 = from_map(K, {{3, 6}, {2, 6}, {0, 5}});
        pub[0] = {from_map(K, {{0, 5}}),
                  m01,
                  m02,
                  m01,
                  from_map(K, {{2, 2}, {1, 6}, {0, 2}}),
                  m12,
                  m02,
                  m12,
                  from_map(K, {{6, 5}, {5, 3}, {4, 6}, {3, 2}, {1, 2}, {0, 1}})};
        Poly<FqField> n02 = from_map(K, {{2, 5}, {1, 3}, {0, 2}});
        Poly<FqField> n12 = from_map(K, {{3, 2}, {2, 1}, {1, 6}, {0, 4}});
        pub[1] = {poly_zero(K),
                  poly_zero(K),
                  n02,
                  poly_zero(K),
                  poly_one(K),
                  n12,
                  n02,
                  n12,
                  from_map(K, {{5, 3}, {4, 6}, {3, 4}, {2, 6}, {0, 4}})};
    }
    for (size_t l = 0; l < 2; ++l)
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                int64_t bound = quadric_degree_bound(qm.e, qm.b, int(l), int(i), int(j));
                if (bound < 0)
                    CHECK(pub[l][3 * i + j].is_zero());
                else
                    CHECK(pub[l][3 * i + j].deg() <= bound);
            }

    // interior count of the Minkowski sum of the pair supports equals g
    CHECK(minkowski_of_pair(K, qm.q) == 10);
    CHECK(minkowski_of_pair(K, pub) == 10);

    auto mine = quadric_plane_model(K, qm.q);
    auto pubp = quadric_plane_model(K, pub);
    CHECK(compare_fibers_mult_free(K, f, mine) >= 1);
    CHECK(compare_fibers_mult_free(K, f, pubp) >= 1);
    CHECK(compare_fibers_mult_free(K, mine, pubp) >= 1);

    ReducedBasis<FqField> rb2 = reduced_basis(K, CurveEq<FqField>(K, monicize_coeffs(K, mine)));
    CHECK(rb2.zero_count == 1);
    CHECK(rb2.genus == 10);
}

TEST_CASE("quadric model identities on random covers over F13") {
    FqField K(13);
    rng64 rng(20260814);
    int accepted = 0, attempts = 0, total_compared = 0, genus_rechecked = 0;
    while (accepted < 12) {
        REQUIRE(++attempts < 600);
        int s = 1 + int(rng.below(2));
        std::vector<Poly<FqField>> f(5, poly_zero(K));
        f[4] = poly_one(K);
        for (int j = 0; j < 4; ++j)
            f[size_t(j)] = random_poly(K, s * (4 - j) + int(rng.below(2)), rng);
        if (f[0].is_zero()) continue;
        QuadricModel<FqField> qm;
        try {
            qm = bhargava_quadric_model(K, f);
        } catch (const degenerate_model&) {
            continue;
        } catch (const gate_rejected&) {
            continue;
        }
        if (qm.genus > 9) continue;
        ++accepted;
        CHECK(qm.b[0] >= -1);
        CHECK(qm.b[0] <= qm.b[1]);
        CHECK(qm.b[0] + qm.b[1] == qm.genus - 5);
        CHECK(minkowski_of_pair(K, qm.q) == qm.genus);
        std::vector<Poly<FqField>> plane;
        try {
            plane = quadric_plane_model(K, qm.q);
        } catch (const degenerate_model&) {
            continue;  // projection to the first coordinate is not birational
        }
        total_compared += compare_fibers_mult_free(K, f, plane);
        CurveEq<FqField> C(K, monicize_coeffs(K, plane));
        if (genus_rechecked < 2 && !C.discriminant_y(K).is_zero()) {
            ReducedBasis<FqField> rb = reduced_basis(K, C);
            CHECK(rb.zero_count == 1);
            CHECK(rb.genus == qm.genus);
            ++genus_rechecked;
        }
    }
    CHECK(total_compared > 0);
    CHECK(genus_rechecked == 2);
}

TEST_CASE("quadric model identities on random covers over F9") {
    FqField K(3, {1, 0, 1});
    rng64 rng(7);
    int accepted = 0, attempts = 0, total_compared = 0;
    while (accepted < 8) {
        REQUIRE(++attempts < 600);
        std::vector<Poly<FqField>> f(5, poly_zero(K));
        f[4] = poly_one(K);
        for (int j = 0; j < 4; ++j) f[size_t(j)] = random_poly(K, (4 - j) + int(rng.below(2)), rng);
        if (f[0].is_zero()) continue;
        QuadricModel<FqField> qm;
        try {
            qm = bhargava_quadric_model(K, f);
        } catch (const degenerate_model&) {
            continue;
        } catch (const gate_rejected&) {
            continue;
        }
        if (qm.genus > 9) continue;
        ++accepted;
        CHECK(qm.b[0] + qm.b[1] == qm.genus - 5);
        CHECK(minkowski_of_pair(K, qm.q) == qm.genus);
        std::vector<Poly<FqField>> plane;
        try {
            plane = quadric_plane_model(K, qm.q);
        } catch (const degenerate_model&) {
            continue;
        }
        total_compared += compare_fibers_mult_free(K, f, plane);
    }
    CHECK(total_compared > 0);
}

TEST_CASE("quartic rejection gates") {
    FqField K2(2);
    std::vector<Poly<FqField>> f2{from_ints(K2, {0, 1}), poly_zero(K2), poly_zero(K2),
                                  poly_zero(K2), poly_one(K2)};
    CHECK_THROWS_AS(bhargava_quadric_model(K2, f2), gate_rejected);

    FqField K(7);
    // (y^2 - x)(y^2 - x - 1) is separable but reducible
    std::vector<Poly<FqField>> red{from_ints(K, {0, 1, 1}), poly_zero(K), from_ints(K, {-1, -2}),
                                   poly_zero(K), poly_one(K)};
    CHECK_THROWS_AS(bhargava_quadric_model(K, red), degenerate_model);

    // y^4 - x has reducible cubic resolvent y(y^2 + 4x)
    std::vector<Poly<FqField>> sup{from_ints(K, {0, -1}), poly_zero(K), poly_zero(K),
                                   poly_zero(K), poly_one(K)};
    CHECK_THROWS_AS(bhargava_quadric_model(K, sup), gate_rejected);

    // inseparable in y
    std::vector<Poly<FqField>> insep{poly_zero(K), poly_zero(K), from_ints(K, {0, 1}),
                                     poly_zero(K), poly_one(K)};
    CHECK_THROWS_AS(bhargava_quadric_model(K, insep), degenerate_model);
}

TEST_CASE("quadric model in characteristic zero") {
    // a pair with linear entries cuts out a genus 3 cover with e = (0,0,0)
    // and b = (-1,-1); eliminating and reparametrizing recovers them
    NumberFieldQ K;
    auto lin = [&](int64_t c1, int64_t c0) { return from_ints(K, {c0, c1}); };
    std::array<std::vector<Poly<NumberFieldQ>>, 2> q;
    q[0] = {lin(-1, -1), lin(-1, 2),  lin(2, -1), lin(-1, 2), lin(0, -1),
            lin(2, -2),  lin(2, -1),  lin(2, -2), lin(-2, 1)};
    q[1] = {poly_zero(K), lin(-2, -1), lin(0, -1), lin(-2, -1), poly_one(K),
            lin(1, -1),   lin(0, -1),  lin(1, -1), lin(-1, 0)};
    auto plane = quadric_plane_model(K, q);
    CHECK(plane[4].deg() == 3);
    QuadricModel<NumberFieldQ> qm = bhargava_quadric_model(K, plane);
    CHECK(qm.genus == 3);
    CHECK(qm.e == std::vector<int64_t>{0, 0, 0});
    CHECK(qm.b == std::vector<int64_t>{-1, -1});
    CHECK(minkowski_interior_count(quadric_support(K, qm.q[0]), quadric_support(K, qm.q[1])) == 3);
    auto plane2 = quadric_plane_model(K, qm.q);
    ReducedBasis<NumberFieldQ> rb =
        reduced_basis(K, CurveEq<NumberFieldQ>(K, monicize_coeffs(K, plane2)));
    CHECK(rb.zero_count == 1);
    CHECK(rb.genus == 3);
}
