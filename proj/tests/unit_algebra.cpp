#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gonal/fp.hpp"
#include "gonal/fq.hpp"
#include "gonal/fq_factor.hpp"
#include "gonal/matrix.hpp"
#include "gonal/multipoly.hpp"
#include "gonal/numberfield.hpp"
#include "gonal/poly.hpp"
#include "gonal/ratfun.hpp"
#include "gonal/rational.hpp"
#include "gonal/ring.hpp"

using namespace gonal;

TEST_CASE("fp arithmetic") {
    FpField F(11);
    CHECK(F.add(7, 8) == 4);
    CHECK(F.sub(3, 7) == 7);
    CHECK(F.mul(6, 8) == 4);
    for (int64_t a = 1; a < 11; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(2, 10) == 1);
    CHECK(F.centered(6) == -5);
    CHECK(F.centered(5) == 5);
    CHECK(F.centered(0) == 0);
    CHECK(F.centered(10) == -1);
    CHECK(F.reduce(-1) == 10);
    CHECK(F.reduce(-22) == 0);
}

TEST_CASE("primality") {
    for (int64_t p : {2, 3, 5, 7, 11, 31, 101, 10007}) CHECK(is_prime_i64(p));
    CHECK(is_prime_i64(2147483647));
    for (int64_t c : {1, 4, 9, 561, 1105, 10005}) CHECK(!is_prime_i64(c));
}

TEST_CASE("fq arithmetic F9") {
    FqField K(3, {1, 0, 1});  // t^2 + 1
    auto t = K.gen();
    CHECK(K.mul(t, t) == K.from_int(-1));
    CHECK(K.pow(t, 4) == K.one());
    CHECK(K.frobenius(t) == K.neg(t));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            FqField::Elem e{a, b};
            CHECK(K.frobenius(K.frobenius(e)) == e);
            if (!K.is_zero(e)) CHECK(K.mul(e, K.inv(e)) == K.one());
        }
    CHECK(K.q_u64() == 9);
}

TEST_CASE("fq pow_limbs F343") {
    FqField K(7, {5, 0, 0, 1});  // t^3 + 5 (2 is a non-cube mod 7)
    rng64 rng(42);
    std::vector<uint32_t> qm1{342};
    for (int i = 0; i < 20; ++i) {
        auto x = K.random(rng);
        if (K.is_zero(x)) continue;
        CHECK(K.pow_limbs(x, qm1) == K.one());
    }
}

TEST_CASE("poly over F7") {
    FqField K(7);
    rng64 rng(7);
    auto rnd = [&](int maxdeg) {
        Poly<FqField> f;
        int d = int(rng.below(uint64_t(maxdeg + 1)));
        for (int i = 0; i <= d; ++i) f.c.push_back(K.random(rng));
        poly_trim(K, f);
        return f;
    };
    for (int it = 0; it < 50; ++it) {
        auto a = rnd(8), b = rnd(4);
        if (b.is_zero()) continue;
        Poly<FqField> q, r;
        poly_divrem(K, a, b, q, r);
        CHECK(poly_eq(K, a, poly_add(K, poly_mul(K, q, b), r)));
        CHECK(r.deg() < b.deg());
        auto u = poly_zero(K), v = poly_zero(K);
        auto g = poly_xgcd(K, a, b, u, v);
        CHECK(poly_eq(K, g, poly_gcd(K, a, b)));
        CHECK(poly_eq(K, g, poly_add(K, poly_mul(K, u, a), poly_mul(K, v, b))));
    }
    auto x = poly_xpow(K, 1);
    auto lin = [&](int64_t a) { return poly_from(K, {K.from_int(-a), K.one()}); };
    auto g = poly_gcd(K, poly_mul(K, lin(1), lin(2)), poly_mul(K, lin(2), lin(3)));
    CHECK(poly_eq(K, g, lin(2)));
    // d/dx (x^7 + x) = 1 in characteristic 7
    auto f7 = poly_add(K, poly_xpow(K, 7), x);
    CHECK(poly_eq(K, poly_derivative(K, f7, 7), poly_one(K)));
    auto f = poly_from(K, {K.from_int(2), K.from_int(3), K.one()});
    CHECK(poly_eval(K, f, K.from_int(4)) == K.from_int(2));
    auto rec = poly_reciprocal(K, poly_from(K, {K.from_int(5), K.one(), K.from_int(3)}), 4);
    CHECK(poly_eq(K, rec, poly_from(K, {K.zero(), K.zero(), K.from_int(3), K.one(), K.from_int(5)})));
    auto m = poly_add(K, poly_xpow(K, 2), poly_one(K));
    CHECK(poly_eq(K, poly_powmod(K, x, 8, m), poly_one(K)));
    auto comp = poly_compose(K, m, poly_add(K, x, poly_one(K)));
    CHECK(poly_eq(K, comp, poly_from(K, {K.from_int(2), K.from_int(2), K.one()})));
}

TEST_CASE("rational functions over F7") {
    FqField K(7);
    RatFunField<FqField> R(K);
    auto x = poly_xpow(K, 1);
    auto e = R.make(poly_sub(K, poly_xpow(K, 2), poly_one(K)), poly_sub(K, x, poly_one(K)));
    CHECK(R.is_poly(e));
    CHECK(poly_eq(K, R.to_poly(e), poly_add(K, x, poly_one(K))));
    auto ix = R.make(poly_one(K), x);
    CHECK(R.eq(R.mul(ix, R.from_poly(x)), R.one()));
    CHECK(R.den_is_xpower(ix));
    auto ixp1 = R.make(poly_one(K), poly_add(K, x, poly_one(K)));
    CHECK(!R.den_is_xpower(ixp1));
    auto s = R.add(ix, ixp1);
    CHECK(poly_eq(K, s.num, poly_from(K, {K.one(), K.from_int(2)})));
    CHECK(poly_eq(K, s.den, poly_from(K, {K.zero(), K.one(), K.one()})));
}

TEST_CASE("number field Q(sqrt 2)") {
    NumberFieldQ K({mpz_class(-2), mpz_class(0), mpz_class(1)});
    NumberFieldQ::Elem t{mpq_class(0), mpq_class(1)};
    CHECK(K.eq(K.mul(t, t), K.from_int(2)));
    NumberFieldQ::Elem a{mpq_class(1), mpq_class(1)};  // 1 + t
    CHECK(K.eq(K.mul(a, K.inv(a)), K.one()));
    CHECK(K.eq(K.inv(a), NumberFieldQ::Elem{mpq_class(-1), mpq_class(1)}));
    CHECK(K.is_integral(NumberFieldQ::Elem{mpq_class(3), mpq_class(-2)}));
    CHECK(!K.is_integral(NumberFieldQ::Elem{mpq_class(1, 2), mpq_class(1)}));
    NumberFieldQ Q;  // plain rationals
    CHECK(Q.n == 1);
    CHECK(Q.eq(Q.mul(Q.from_q(mpq_class(2, 3)), Q.from_q(mpq_class(3, 2))), Q.one()));
}

TEST_CASE("matrices over F13") {
    FqField K(13);
    auto I = [&](int64_t v) { return K.from_int(v); };
    Mat<FqField> A = mat_zero(K, 2, 2);
    A.at(0, 0) = I(2);
    A.at(0, 1) = I(3);
    A.at(1, 0) = I(1);
    A.at(1, 1) = I(4);
    CHECK(mat_det(K, A) == I(5));
    auto Ainv = mat_inverse(K, A);
    CHECK(mat_eq(K, mat_mul(K, A, Ainv), mat_identity(K, 2)));
    auto xs = mat_solve_left(K, A, {I(1), I(0)});
    // verify x A = b
    CHECK(K.add(K.mul(xs[0], A.at(0, 0)), K.mul(xs[1], A.at(1, 0))) == I(1));
    CHECK(K.add(K.mul(xs[0], A.at(0, 1)), K.mul(xs[1], A.at(1, 1))) == I(0));

    Mat<FqField> B = mat_zero(K, 2, 3);
    B.at(0, 0) = I(1);
    B.at(0, 1) = I(2);
    B.at(0, 2) = I(3);
    B.at(1, 0) = I(2);
    B.at(1, 1) = I(4);
    B.at(1, 2) = I(6);
    CHECK(mat_rank(K, B) == 1);
    auto ker = mat_kernel(K, B);
    CHECK(ker.m == 2);
    auto prod = mat_mul(K, B, mat_transpose(K, ker));
    CHECK(mat_eq(K, prod, mat_zero(K, 2, 2)));
}

TEST_CASE("bareiss determinant and resultants over Z") {
    ZRing Z;
    std::vector<mpz_class> m2{1, 2, 3, 4};
    CHECK(det_bareiss(Z, m2, 2) == -2);
    std::vector<mpz_class> m3{2, 0, 1, 1, 3, -1, 0, 5, 4};
    CHECK(det_bareiss(Z, m3, 3) == 39);
    // ascending coefficients
    std::vector<mpz_class> f{-2, 1}, g{-5, 1};
    CHECK(sylvester_resultant(Z, f, g) == -3);
    std::vector<mpz_class> f2{-1, 0, 1}, g2{-4, 0, 1};
    CHECK(sylvester_resultant(Z, f2, g2) == 9);
    std::vector<mpz_class> f3{2, -3, 1}, g3{3, -4, 1};
    CHECK(sylvester_resultant(Z, f3, g3) == 0);
    // random 4x4: Bareiss over Z vs Gaussian determinant over Q
    rng64 rng(99);
    QField Q;
    for (int it = 0; it < 10; ++it) {
        std::vector<mpz_class> m(16);
        Mat<QField> MQ = mat_zero(Q, 4, 4);
        for (int i = 0; i < 16; ++i) {
            int64_t v = int64_t(rng.below(19)) - 9;
            m[size_t(i)] = v;
            MQ.at(size_t(i / 4), size_t(i % 4)) = mpq_class(long(v));
        }
        CHECK(mpq_class(det_bareiss(Z, m, 4)) == mat_det(Q, MQ));
    }
}

TEST_CASE("sparse multivariate polynomials") {
    ZRing Z;
    MPolyRing<ZRing> R(Z, 2);
    auto x = R.var(0), y = R.var(1);
    auto s = R.add(x, y);
    auto s2 = R.mul(s, s);
    CHECK(R.coeff(s2, mkey_of_var(0, 2)) == 1);
    CHECK(R.coeff(s2, mkey_of_var(0, 1) + mkey_of_var(1, 1)) == 2);
    CHECK(R.coeff(s2, mkey_of_var(1, 2)) == 1);
    CHECK(R.total_deg(s2) == 2);
    CHECK(R.deg_in(s2, 0) == 2);
    auto d = R.divexact(R.sub(R.mul(x, x), R.mul(y, y)), R.sub(x, y));
    CHECK(R.eq(d, s));
    auto p = R.mul(x, y);
    auto sub = R.subst(p, 1, R.add(x, R.one()));
    CHECK(R.eq(sub, R.add(R.mul(x, x), x)));
    auto cube = R.mul(s2, s);
    CHECK(R.eval(cube, {mpz_class(2), mpz_class(3)}) == 125);
    auto cf = R.coeff_of(cube, 1, 2);  // coeff of y^2 in (x+y)^3 is 3x
    CHECK(R.eq(cf, R.mul_coeff(mpz_class(3), x)));
}

TEST_CASE("factorization over F7") {
    FqField K(7);
    auto lin = [&](int64_t a) { return poly_from(K, {K.from_int(-a), K.one()}); };
    auto x2p1 = poly_add(K, poly_xpow(K, 2), poly_one(K));
    auto f = poly_mul(K, poly_mul(K, lin(1), lin(1)), poly_mul(K, lin(-1), x2p1));
    auto fac = fq_factor(K, f);
    REQUIRE(fac.size() == 3);
    // sorted by degree then coefficients
    CHECK(poly_eq(K, fac[0].first, lin(-1)));
    CHECK(fac[0].second == 1);
    CHECK(poly_eq(K, fac[1].first, lin(1)));
    CHECK(fac[1].second == 2);
    CHECK(poly_eq(K, fac[2].first, x2p1));
    CHECK(fac[2].second == 1);
    Poly<FqField> re = poly_one(K);
    for (auto& [g, m] : fac)
        for (int i = 0; i < m; ++i) re = poly_mul(K, re, g);
    CHECK(poly_eq(K, re, poly_monic(K, f)));

    auto roots = fq_roots(K, poly_sub(K, poly_xpow(K, 3), poly_one(K)));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == K.from_int(1));
    CHECK(roots[1] == K.from_int(2));
    CHECK(roots[2] == K.from_int(4));

    CHECK(fq_is_irreducible(K, x2p1));
    FqField K13(13);
    CHECK(!fq_is_irreducible(K13, poly_add(K13, poly_xpow(K13, 2), poly_one(K13))));
}

TEST_CASE("squarefree decomposition with p-th powers") {
    FqField K(7);
    auto lin = [&](int64_t a) { return poly_from(K, {K.from_int(-a), K.one()}); };
    auto f = poly_mul(K, poly_mul(K, lin(1), lin(1)),
                      poly_mul(K, poly_mul(K, lin(2), lin(2)), lin(2)));
    std::vector<std::pair<Poly<FqField>, int>> dec;
    fq_squarefree_decomp(K, f, dec);
    REQUIRE(dec.size() == 2);
    CHECK(poly_eq(K, dec[0].first, lin(1)));
    CHECK(dec[0].second == 2);
    CHECK(poly_eq(K, dec[1].first, lin(2)));
    CHECK(dec[1].second == 3);

    // (x^2+1)^7 = x^14 + 1 in characteristic 7
    auto f2 = poly_add(K, poly_xpow(K, 14), poly_one(K));
    dec.clear();
    fq_squarefree_decomp(K, f2, dec);
    REQUIRE(dec.size() == 1);
    CHECK(poly_eq(K, dec[0].first, poly_add(K, poly_xpow(K, 2), poly_one(K))));
    CHECK(dec[0].second == 7);
}

TEST_CASE("random irreducibles and roots in extensions") {
    FqField K(3);
    rng64 rng(5);
    auto f = fq_random_irreducible(K, 5, rng);
    CHECK(f.deg() == 5);
    CHECK(fq_is_irreducible(K, f));
    auto fac = fq_factor(K, f);
    REQUIRE(fac.size() == 1);
    CHECK(poly_eq(K, fac[0].first, f));

    FqField K9(3, {1, 0, 1});
    auto t = K9.gen();
    auto t1 = K9.add(t, K9.one());
    auto g = poly_from(K9, {K9.mul(t, t1), K9.neg(K9.add(t, t1)), K9.one()});
    auto roots = fq_roots(K9, g);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == t);
    CHECK(roots[1] == t1);

    CHECK((fq_pth_root(K9, K9.pow(t1, 3)) == t1));
}

TEST_CASE("ddf splits by degree") {
    FqField K(5);
    auto q1 = poly_from(K, {K.from_int(2), K.zero(), K.one()});  // x^2+2
    auto q2 = poly_from(K, {K.from_int(3), K.zero(), K.one()});  // x^2+3
    REQUIRE(fq_is_irreducible(K, q1));
    REQUIRE(fq_is_irreducible(K, q2));
    auto lin = poly_from(K, {K.from_int(1), K.one()});
    auto f = poly_mul(K, poly_mul(K, q1, q2), lin);
    auto dd = fq_ddf(K, fq_squarefree_part(K, f));
    REQUIRE(dd.size() == 2);
    CHECK(dd[0].second == 1);
    CHECK(poly_eq(K, dd[0].first, lin));
    CHECK(dd[1].second == 2);
    CHECK(poly_eq(K, dd[1].first, poly_monic(K, poly_mul(K, q1, q2))));
    std::vector<Poly<FqField>> irr;
    rng64 rng(11);
    fq_edf(K, dd[1].first, 2, irr, rng);
    REQUIRE(irr.size() == 2);
    CHECK((poly_eq(K, irr[0], q1) || poly_eq(K, irr[0], q2)));
    CHECK((poly_eq(K, irr[1], q1) || poly_eq(K, irr[1], q2)));
    CHECK(!poly_eq(K, irr[0], irr[1]));
}
