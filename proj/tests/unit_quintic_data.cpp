#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "gonal/fq.hpp"
#include "gonal/fq_factor.hpp"
#include "gonal/quintic_precompute.hpp"

using namespace gonal;

namespace {

const QuinticPrecomputation& data() {
    static QuinticPrecomputation D = load_quintic_data(GONAL_QUINTIC_DATA_PATH);
    return D;
}

int64_t elem_val(const FqField::Elem& e) { return e.empty() ? 0 : e[0]; }

}  // namespace

TEST_CASE("precomputed quintic data loads, round trips, and is skew") {
    const auto& D = data();
    std::ostringstream s1;
    serialize_quintic_data(s1, D);
    std::istringstream in(s1.str());
    QuinticPrecomputation D2 = parse_quintic_data(in);
    std::ostringstream s2;
    serialize_quintic_data(s2, D2);
    CHECK(s1.str() == s2.str());

    for (int j = 0; j < 6; j++) CHECK(!D.res[size_t(j)].is_zero());
    for (int r = 0; r < 5; r++)
        for (int i = 0; i < 5; i++) {
            CHECK(D.m[size_t(r)][size_t(i)][size_t(i)].is_zero());
            for (int j = 0; j < 5; j++) {
                const auto& P = D.m[size_t(r)][size_t(i)][size_t(j)];
                const auto& N = D.m[size_t(r)][size_t(j)][size_t(i)];
                REQUIRE(P.terms.size() == N.terms.size());
                for (size_t t = 0; t < P.terms.size(); t++) {
                    CHECK(P.terms[t].e == N.terms[t].e);
                    CHECK(P.terms[t].c == -N.terms[t].c);
                }
            }
        }

    // the top resolvent coefficient is -6 f3^2 + 16 f2 f4 - 40 f1
    const auto& top = D.res[5];
    REQUIRE(top.terms.size() == 3);
    for (const auto& t : top.terms) {
        if (t.e == std::array<int32_t, 5>{0, 1, 0, 0, 0}) CHECK(t.c == -40);
        if (t.e == std::array<int32_t, 5>{0, 0, 1, 0, 1}) CHECK(t.c == 16);
        if (t.e == std::array<int32_t, 5>{0, 0, 0, 2, 0}) CHECK(t.c == -6);
    }
}

TEST_CASE("tampered data files are rejected") {
    std::ostringstream ser;
    serialize_quintic_data(ser, data());
    const std::string good = ser.str();

    {
        std::string bad = good;
        bad.replace(0, std::string(quintic_data_version()).size(), "gonal.quintic.v9");
        std::istringstream in(bad);
        CHECK_THROWS_AS(parse_quintic_data(in), internal_error);
    }
    {
        // swapping two term lines breaks the canonical order
        std::string bad = good;
        size_t hdr = bad.find("res 0 ");
        REQUIRE(hdr != std::string::npos);
        size_t l1 = bad.find('\n', hdr) + 1;
        size_t l2 = bad.find('\n', l1) + 1;
        size_t l3 = bad.find('\n', l2) + 1;
        std::string a = bad.substr(l1, l2 - l1), b = bad.substr(l2, l3 - l2);
        bad = bad.substr(0, l1) + b + a + bad.substr(l3);
        std::istringstream in(bad);
        CHECK_THROWS_AS(parse_quintic_data(in), internal_error);
    }
    {
        // perturbing an exponent moves the term off its isobaric weight
        std::string bad = good;
        size_t hdr = bad.find("res 5 ");
        REQUIRE(hdr != std::string::npos);
        size_t l1 = bad.find('\n', hdr) + 1;
        size_t l2 = bad.find('\n', l1);
        std::string line = bad.substr(l1, l2 - l1);
        line.back() = line.back() == '0' ? '1' : '0';
        bad = bad.substr(0, l1) + line + bad.substr(l2);
        std::istringstream in(bad);
        CHECK_THROWS_AS(parse_quintic_data(in), internal_error);
    }
}

TEST_CASE("resolvent and matrix data match direct evaluation over splitting fields") {
    const auto& D = data();
    const RhoPattern& T = rho_pattern();
    rng64 rng(20260814);
    int done = 0;
    for (int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        FqField Kp(p);
        int done_p = 0, attempts = 0;
        while (done_p < 2) {
            REQUIRE(++attempts < 200);
            std::vector<int64_t> cv(6, 0);
            cv[5] = 1;
            for (int j = 0; j < 5; j++) cv[size_t(j)] = int64_t(rng.below(uint64_t(p)));
            std::vector<FqField::Elem> cc;
            for (int64_t x : cv) cc.push_back(Kp.from_int(x));
            Poly<FqField> fy = poly_from(Kp, cc);
            if (poly_gcd(Kp, fy, poly_derivative(Kp, fy)).deg() != 0) continue;

            int64_t L = 1;
            for (const auto& [h, mult] : fq_factor(Kp, fy, 5)) L = std::lcm(L, int64_t(h.deg()));
            FqField E = [&] {
                if (L == 1) return FqField(p);
                Poly<FqField> mp = fq_random_irreducible(Kp, int(L), rng);
                std::vector<int64_t> limbs;
                for (int j = 0; j <= int(L); j++) limbs.push_back(elem_val(poly_coeff(Kp, mp, j)));
                return FqField(p, limbs);
            }();
            std::vector<FqField::Elem> fc;
            for (int j = 0; j <= 5; j++) fc.push_back(E.from_int(cv[size_t(j)]));
            auto roots = fq_roots(E, poly_from(E, fc), 7);
            REQUIRE(roots.size() == 5);

            // labeled resolvent values from the signed pair patterns
            std::array<FqField::Elem, 6> rho;
            for (int k = 0; k < 6; k++) {
                auto q = E.zero();
                for (int m = 0; m < 10; m++) {
                    auto t = E.mul(roots[size_t(T.pa[size_t(m)])], roots[size_t(T.pb[size_t(m)])]);
                    q = T.sign[size_t(k)][size_t(m)] > 0 ? E.add(q, t) : E.sub(q, t);
                }
                rho[size_t(k)] = E.mul(q, q);
            }

            // the specialized sextic equals the product over the six values
            std::array<FqField::Elem, 5> fv;
            for (int j = 0; j < 5; j++) fv[size_t(j)] = E.from_int(cv[size_t(j)]);
            Poly<FqField> prod = poly_one(E);
            for (int k = 0; k < 6; k++)
                prod = poly_mul(E, prod, poly_from(E, {E.neg(rho[size_t(k)]), E.one()}));
            REQUIRE(prod.deg() == 6);
            for (int j = 0; j < 6; j++) {
                auto want = eval_fpoly_at(E, D.res[size_t(j)], fv);
                CHECK(E.eq(poly_coeff(E, prod, j), want));
            }

            // the map on basis pairs: Vandermonde factor times the 3x3
            // determinant with columns pairing labels {1,2}, {3,6}, {4,5}
            auto sd = E.one();
            for (int a = 0; a < 5; a++)
                for (int b = a + 1; b < 5; b++) sd = E.mul(sd, E.sub(roots[size_t(b)], roots[size_t(a)]));
            std::array<std::array<FqField::Elem, 3>, 6> cs;
            for (int e = 0; e <= 5; e++) {
                auto pw = [&](int k) {
                    auto v = E.one();
                    for (int t = 0; t < e; t++) v = E.mul(v, rho[size_t(k)]);
                    return v;
                };
                cs[size_t(e)] = {E.add(pw(0), pw(1)), E.add(pw(2), pw(5)), E.add(pw(3), pw(4))};
            }
            auto y1 = roots[0];
            for (int i = 1; i <= 5; i++)
                for (int j = i + 1; j <= 5; j++) {
                    const auto& A = cs[size_t(i)];
                    const auto& B = cs[size_t(j)];
                    auto det = E.sub(E.mul(A[1], B[2]), E.mul(A[2], B[1]));
                    det = E.sub(det, E.sub(E.mul(A[0], B[2]), E.mul(A[2], B[0])));
                    det = E.add(det, E.sub(E.mul(A[0], B[1]), E.mul(A[1], B[0])));
                    auto lhs = E.mul(sd, det);
                    auto rhs = E.zero();
                    auto ypow = E.one();
                    for (int r = 0; r < 5; r++) {
                        auto coef = eval_fpoly_at(E, D.m[size_t(r)][size_t(i - 1)][size_t(j - 1)], fv);
                        rhs = E.add(rhs, E.mul(coef, ypow));
                        ypow = E.mul(ypow, y1);
                    }
                    CHECK(E.eq(lhs, rhs));
                }
            done_p++;
            done++;
        }
    }
    CHECK(done >= 10);
}

TEST_CASE("data polynomials are isobaric for the root scaling") {
    const auto& D = data();
    FqField E(2003);
    rng64 rng(777);
    for (int trial = 0; trial < 4; trial++) {
        std::array<FqField::Elem, 5> fv, fs;
        auto lam = E.from_int(2 + int64_t(rng.below(1999)));
        std::vector<FqField::Elem> lp{E.one()};
        for (int t = 1; t <= 48; t++) lp.push_back(E.mul(lp.back(), lam));
        for (int k = 0; k < 5; k++) {
            fv[size_t(k)] = E.from_int(int64_t(rng.below(2003)));
            fs[size_t(k)] = E.mul(fv[size_t(k)], lp[size_t(5 - k)]);
        }
        for (int j = 0; j < 6; j++) {
            auto a = eval_fpoly_at(E, D.res[size_t(j)], fs);
            auto b = E.mul(eval_fpoly_at(E, D.res[size_t(j)], fv), lp[size_t(quintic_res_weight(j))]);
            CHECK(E.eq(a, b));
        }
        for (int r = 0; r < 5; r++)
            for (int i = 0; i < 5; i++)
                for (int j = i + 1; j < 5; j++) {
                    auto a = eval_fpoly_at(E, D.m[size_t(r)][size_t(i)][size_t(j)], fs);
                    auto b = E.mul(eval_fpoly_at(E, D.m[size_t(r)][size_t(i)][size_t(j)], fv),
                                   lp[size_t(quintic_m_weight(r, i, j))]);
                    CHECK(E.eq(a, b));
                }
    }
}
