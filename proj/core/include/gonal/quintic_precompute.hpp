// Build-time symbolic precompute for degree 5 covers.  The six sextic
// resolvent values and the resolvent map on the naive power bases are
// evaluated numerically on random split quintics over word-size prime
// fields; each isobaric component is recovered by dense interpolation on
// the monomials of its weight, lifted to Q by CRT and rational
// reconstruction, and certified against an independent extra prime.
//
// The six resolvent values are labeled by their stabilizers inside S_5: the
// seed is the square of the signed pentagonal pair sum on r_1..r_5, fixed by
// the order 20 group generated by (12345) and (1243); the other five labels
// are its conjugates under powers of (12345).  The three column pairs
// {1,2}, {3,6}, {4,5} of the 3x3 determinant form the unique perfect
// matching of the six labels stable under the stabilizer of r_1.
#pragma once
#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "gonal/quintic_data.hpp"
#include "gonal/rational.hpp"
#include "gonal/util.hpp"

namespace gonal {

// signs of the ten quadratic monomials r_a r_b (a < b) in each of the six
// labeled square roots rho_k = (sum of signed pairs)^2
struct RhoPattern {
    std::array<std::array<int8_t, 10>, 6> sign;
    std::array<int8_t, 10> pa, pb;  // pair index -> variable indices a < b
};

namespace qpre {

using perm5 = std::array<int, 5>;
using pat10 = std::array<int8_t, 10>;

inline perm5 perm_compose(const perm5& a, const perm5& b) {
    perm5 c;
    for (int i = 0; i < 5; i++) c[i] = a[b[i]];
    return c;
}
inline perm5 perm_inverse(const perm5& a) {
    perm5 c;
    for (int i = 0; i < 5; i++) c[a[i]] = i;
    return c;
}

inline RhoPattern build_rho_pattern() {
    RhoPattern T{};
    int pidx[5][5];
    int np = 0;
    for (int a = 0; a < 5; a++)
        for (int b = a + 1; b < 5; b++) {
            pidx[a][b] = np;
            T.pa[np] = int8_t(a);
            T.pb[np] = int8_t(b);
            np++;
        }
    auto canon = [](pat10 c) {
        if (c[0] < 0)
            for (auto& x : c) x = int8_t(-x);
        return c;
    };
    auto act = [&](const perm5& s, const pat10& c) {
        pat10 r{};
        for (int a = 0; a < 5; a++)
            for (int b = a + 1; b < 5; b++) {
                int ia = s[a] < s[b] ? s[a] : s[b], ib = s[a] < s[b] ? s[b] : s[a];
                r[pidx[ia][ib]] = c[pidx[a][b]];
            }
        return r;
    };

    pat10 seed{};
    auto setp = [&](int a, int b, int v) { seed[pidx[a][b]] = int8_t(v); };
    setp(0, 1, 1), setp(1, 2, 1), setp(2, 3, 1), setp(3, 4, 1), setp(0, 4, 1);
    setp(0, 2, -1), setp(2, 4, -1), setp(1, 4, -1), setp(1, 3, -1), setp(0, 3, -1);
    seed = canon(seed);

    std::vector<perm5> s5;
    perm5 p = {0, 1, 2, 3, 4};
    do {
        s5.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::set<pat10> orbit_set;
    for (auto& s : s5) orbit_set.insert(canon(act(s, seed)));
    GONAL_CHECK(orbit_set.size() == 6, "rho pattern: orbit is not six elements");
    std::vector<pat10> orb(orbit_set.begin(), orbit_set.end());

    const perm5 c5 = {1, 2, 3, 4, 0};  // (12345)
    const perm5 g2 = {1, 3, 0, 2, 4};  // (1243)
    const perm5 h1 = {2, 4, 1, 0, 3};  // (13254)
    const perm5 h2 = {0, 3, 1, 4, 2};  // (3245)
    auto fixes = [&](const perm5& s, const pat10& r) { return canon(act(s, r)) == r; };
    auto find_fixed = [&](const perm5& a1, const perm5& a2) {
        int found = -1, cnt = 0;
        for (int m = 0; m < 6; m++)
            if (fixes(a1, orb[static_cast<size_t>(m)]) && fixes(a2, orb[static_cast<size_t>(m)])) {
                found = m;
                cnt++;
            }
        GONAL_CHECK(cnt == 1, "rho pattern: stabilizer does not pin a unique label");
        return found;
    };
    T.sign[0] = orb[static_cast<size_t>(find_fixed(c5, g2))];
    perm5 cpow = {0, 1, 2, 3, 4};
    for (int i = 0; i < 5; i++) {
        perm5 cinv = perm_inverse(cpow);
        T.sign[static_cast<size_t>(1 + i)] =
            orb[static_cast<size_t>(find_fixed(perm_compose(cinv, perm_compose(h1, cpow)),
                                               perm_compose(cinv, perm_compose(h2, cpow))))];
        cpow = perm_compose(c5, cpow);
    }
    std::set<pat10> distinct(T.sign.begin(), T.sign.end());
    GONAL_CHECK(distinct.size() == 6, "rho pattern: labels collide");
    return T;
}

}  // namespace qpre

inline const RhoPattern& rho_pattern() {
    static const RhoPattern T = qpre::build_rho_pattern();
    return T;
}

// values attached to one ordered root tuple: the six labeled resolvent
// values, the root Vandermonde determinant, and the map values g[i][j] for
// the resolvent basis powers y^{i+1}, y^{j+1}
template <class k>
struct QuinticTupleValues {
    std::array<typename k::Elem, 6> rho;
    typename k::Elem sqrtdisc;
    std::array<std::array<typename k::Elem, 5>, 5> g;
};

template <class k>
QuinticTupleValues<k> quintic_eval_tuple(const k& K, const std::array<typename k::Elem, 5>& t) {
    const RhoPattern& T = rho_pattern();
    QuinticTupleValues<k> out;
    std::array<typename k::Elem, 10> pp;
    for (int m = 0; m < 10; m++) pp[m] = K.mul(t[T.pa[m]], t[T.pb[m]]);
    for (int kk = 0; kk < 6; kk++) {
        auto q = K.zero();
        for (int m = 0; m < 10; m++)
            q = T.sign[static_cast<size_t>(kk)][static_cast<size_t>(m)] > 0 ? K.add(q, pp[m])
                                                                            : K.sub(q, pp[m]);
        out.rho[static_cast<size_t>(kk)] = K.mul(q, q);
    }
    auto sd = K.one();
    for (int a = 0; a < 5; a++)
        for (int b = a + 1; b < 5; b++) sd = K.mul(sd, K.sub(t[b], t[a]));
    out.sqrtdisc = sd;
    // powers of the six values, then the three column sums per power;
    // columns pair the labels as {1,2}, {3,6}, {4,5}
    std::array<std::array<typename k::Elem, 6>, 6> rp;
    for (int kk = 0; kk < 6; kk++) {
        rp[static_cast<size_t>(kk)][0] = K.one();
        for (int e = 1; e <= 5; e++)
            rp[static_cast<size_t>(kk)][static_cast<size_t>(e)] =
                K.mul(rp[static_cast<size_t>(kk)][static_cast<size_t>(e - 1)],
                      out.rho[static_cast<size_t>(kk)]);
    }
    std::array<std::array<typename k::Elem, 3>, 6> cs;
    for (int e = 0; e <= 5; e++) {
        cs[static_cast<size_t>(e)][0] = K.add(rp[0][static_cast<size_t>(e)], rp[1][static_cast<size_t>(e)]);
        cs[static_cast<size_t>(e)][1] = K.add(rp[2][static_cast<size_t>(e)], rp[5][static_cast<size_t>(e)]);
        cs[static_cast<size_t>(e)][2] = K.add(rp[3][static_cast<size_t>(e)], rp[4][static_cast<size_t>(e)]);
    }
    for (int i = 0; i < 5; i++)
        for (int j = 0; j < 5; j++) {
            const auto& A = cs[static_cast<size_t>(i + 1)];
            const auto& B = cs[static_cast<size_t>(j + 1)];
            auto d = K.sub(K.mul(A[1], B[2]), K.mul(A[2], B[1]));
            d = K.sub(d, K.sub(K.mul(A[0], B[2]), K.mul(A[2], B[0])));
            d = K.add(d, K.sub(K.mul(A[0], B[1]), K.mul(A[1], B[0])));
            out.g[static_cast<size_t>(i)][static_cast<size_t>(j)] = K.mul(sd, d);
        }
    return out;
}

namespace qpre {

// one split quintic: the monic coefficients, the sextic resolvent values,
// and the y-power components c[pair][r] of the map on all ten basis pairs
struct Sample {
    std::array<int64_t, 5> f;
    std::array<int64_t, 6> res;
    std::array<std::array<int64_t, 5>, 10> c;
    std::array<std::vector<int64_t>, 5> fpow;  // fpow[v][e] = f_v^e
};

inline const std::array<std::array<int, 2>, 10>& pair_list() {
    static const std::array<std::array<int, 2>, 10> P = {
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    return P;
}

inline Sample eval_sample(const FpRing& F, const std::array<int64_t, 5>& roots, int max_weight) {
    Sample S;
    std::array<int64_t, 6> fc{};
    fc[0] = 1;
    int deg = 0;
    for (int m = 0; m < 5; m++) {
        for (int d = deg + 1; d >= 1; d--)
            fc[static_cast<size_t>(d)] =
                F.sub(fc[static_cast<size_t>(d - 1)], F.mul(roots[static_cast<size_t>(m)], fc[static_cast<size_t>(d)]));
        fc[0] = F.mul(F.neg(roots[static_cast<size_t>(m)]), fc[0]);
        deg++;
    }
    GONAL_CHECK(fc[5] == 1, "sample: product of linear factors is not monic");
    for (int v = 0; v < 5; v++) S.f[static_cast<size_t>(v)] = fc[static_cast<size_t>(v)];

    std::array<QuinticTupleValues<FpRing>, 5> pv;
    for (int m = 0; m < 5; m++) {
        auto t = roots;
        std::swap(t[0], t[static_cast<size_t>(m)]);
        pv[static_cast<size_t>(m)] = quintic_eval_tuple(F, t);
    }
    std::array<int64_t, 7> rc{};
    rc[0] = 1;
    deg = 0;
    for (int kk = 0; kk < 6; kk++) {
        for (int d = deg + 1; d >= 1; d--)
            rc[static_cast<size_t>(d)] = F.sub(rc[static_cast<size_t>(d - 1)],
                                               F.mul(pv[0].rho[static_cast<size_t>(kk)], rc[static_cast<size_t>(d)]));
        rc[0] = F.mul(F.neg(pv[0].rho[static_cast<size_t>(kk)]), rc[0]);
        deg++;
    }
    GONAL_CHECK(rc[6] == 1, "sample: resolvent product is not monic");
    for (int j = 0; j < 6; j++) S.res[static_cast<size_t>(j)] = rc[static_cast<size_t>(j)];

    // solve sum_r c_r roots[m]^r = g value at conjugate m, for all ten pairs
    std::array<std::array<int64_t, 15>, 5> aug;
    for (int m = 0; m < 5; m++) {
        aug[static_cast<size_t>(m)][0] = 1;
        for (int r = 1; r < 5; r++)
            aug[static_cast<size_t>(m)][static_cast<size_t>(r)] =
                F.mul(aug[static_cast<size_t>(m)][static_cast<size_t>(r - 1)], roots[static_cast<size_t>(m)]);
        for (int q = 0; q < 10; q++)
            aug[static_cast<size_t>(m)][static_cast<size_t>(5 + q)] =
                pv[static_cast<size_t>(m)].g[static_cast<size_t>(pair_list()[static_cast<size_t>(q)][0])]
                                            [static_cast<size_t>(pair_list()[static_cast<size_t>(q)][1])];
    }
    for (int col = 0; col < 5; col++) {
        int piv = -1;
        for (int r = col; r < 5 && piv < 0; r++)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)]) piv = r;
        GONAL_CHECK(piv >= 0, "sample: root Vandermonde is singular");
        std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(piv)]);
        int64_t inv = F.inv(aug[static_cast<size_t>(col)][static_cast<size_t>(col)]);
        for (int cc = col; cc < 15; cc++)
            aug[static_cast<size_t>(col)][static_cast<size_t>(cc)] =
                F.mul(aug[static_cast<size_t>(col)][static_cast<size_t>(cc)], inv);
        for (int r = 0; r < 5; r++)
            if (r != col && aug[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                int64_t m0 = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
                for (int cc = col; cc < 15; cc++)
                    aug[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                        F.sub(aug[static_cast<size_t>(r)][static_cast<size_t>(cc)],
                              F.mul(m0, aug[static_cast<size_t>(col)][static_cast<size_t>(cc)]));
            }
    }
    for (int q = 0; q < 10; q++)
        for (int r = 0; r < 5; r++)
            S.c[static_cast<size_t>(q)][static_cast<size_t>(r)] =
                aug[static_cast<size_t>(r)][static_cast<size_t>(5 + q)];

    for (int v = 0; v < 5; v++) {
        int cap = max_weight / (5 - v);
        S.fpow[static_cast<size_t>(v)].assign(static_cast<size_t>(cap) + 1, 1);
        for (int e = 1; e <= cap; e++)
            S.fpow[static_cast<size_t>(v)][static_cast<size_t>(e)] =
                F.mul(S.fpow[static_cast<size_t>(v)][static_cast<size_t>(e - 1)], S.f[static_cast<size_t>(v)]);
    }
    return S;
}

inline std::vector<std::array<int32_t, 5>> monomials_of_weight(int W) {
    std::vector<std::array<int32_t, 5>> out;
    for (int32_t e0 = 0; 5 * e0 <= W; e0++)
        for (int32_t e1 = 0; 5 * e0 + 4 * e1 <= W; e1++)
            for (int32_t e2 = 0; 5 * e0 + 4 * e1 + 3 * e2 <= W; e2++)
                for (int32_t e3 = 0; 5 * e0 + 4 * e1 + 3 * e2 + 2 * e3 <= W; e3++)
                    out.push_back({e0, e1, e2, e3, int32_t(W - (5 * e0 + 4 * e1 + 3 * e2 + 2 * e3))});
    return out;
}

// a poly slot of one weight class: either a resolvent coefficient or one
// component m[r][pair]
struct PolySlot {
    bool is_res;
    int res_j;
    int r, pair;
};

inline int64_t slot_value(const Sample& S, const PolySlot& slot) {
    if (slot.is_res) return S.res[static_cast<size_t>(slot.res_j)];
    return S.c[static_cast<size_t>(slot.pair)][static_cast<size_t>(slot.r)];
}

// dense interpolation of all slots of one weight from the first n samples;
// the trailing samples cross-check the result
inline std::vector<std::vector<int64_t>> interpolate_weight(
    const FpRing& F, const std::vector<Sample>& samples, int W,
    const std::vector<std::array<int32_t, 5>>& monos, const std::vector<PolySlot>& slots,
    int n_extra) {
    const int n = int(monos.size());
    const int nr = int(slots.size());
    GONAL_CHECK(int(samples.size()) >= n + n_extra, "interpolation: not enough samples");
    const int cols = n + nr;
    std::vector<int64_t> A(static_cast<size_t>(n) * static_cast<size_t>(cols));
    auto mono_at = [&](const Sample& S, const std::array<int32_t, 5>& e) {
        int64_t v = S.fpow[0][static_cast<size_t>(e[0])];
        v = F.mul(v, S.fpow[1][static_cast<size_t>(e[1])]);
        v = F.mul(v, S.fpow[2][static_cast<size_t>(e[2])]);
        v = F.mul(v, S.fpow[3][static_cast<size_t>(e[3])]);
        v = F.mul(v, S.fpow[4][static_cast<size_t>(e[4])]);
        return v;
    };
    for (int s = 0; s < n; s++) {
        int64_t* row = &A[static_cast<size_t>(s) * static_cast<size_t>(cols)];
        for (int m = 0; m < n; m++) row[m] = mono_at(samples[static_cast<size_t>(s)], monos[static_cast<size_t>(m)]);
        for (int q = 0; q < nr; q++) row[n + q] = slot_value(samples[static_cast<size_t>(s)], slots[static_cast<size_t>(q)]);
    }
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n && piv < 0; r++)
            if (A[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(col)]) piv = r;
        GONAL_CHECK(piv >= 0, "interpolation: singular sample matrix (weight " + std::to_string(W) + ")");
        if (piv != col)
            for (int cc = col; cc < cols; cc++)
                std::swap(A[static_cast<size_t>(col) * static_cast<size_t>(cols) + static_cast<size_t>(cc)],
                          A[static_cast<size_t>(piv) * static_cast<size_t>(cols) + static_cast<size_t>(cc)]);
        int64_t* prow = &A[static_cast<size_t>(col) * static_cast<size_t>(cols)];
        int64_t inv = F.inv(prow[col]);
        for (int cc = col; cc < cols; cc++) prow[cc] = F.mul(prow[cc], inv);
        for (int r = 0; r < n; r++) {
            if (r == col) continue;
            int64_t* row = &A[static_cast<size_t>(r) * static_cast<size_t>(cols)];
            int64_t m0 = row[col];
            if (!m0) continue;
            for (int cc = col; cc < cols; cc++) row[cc] = F.sub(row[cc], F.mul(m0, prow[cc]));
        }
    }
    std::vector<std::vector<int64_t>> out(static_cast<size_t>(nr), std::vector<int64_t>(static_cast<size_t>(n)));
    for (int q = 0; q < nr; q++)
        for (int m = 0; m < n; m++)
            out[static_cast<size_t>(q)][static_cast<size_t>(m)] =
                A[static_cast<size_t>(m) * static_cast<size_t>(cols) + static_cast<size_t>(n + q)];
    // cross-check on held-out samples
    for (int s = n; s < n + n_extra; s++) {
        const Sample& S = samples[static_cast<size_t>(s)];
        for (int q = 0; q < nr; q++) {
            int64_t v = 0;
            for (int m = 0; m < n; m++)
                v = F.add(v, F.mul(out[static_cast<size_t>(q)][static_cast<size_t>(m)],
                                   mono_at(S, monos[static_cast<size_t>(m)])));
            GONAL_CHECK(v == slot_value(S, slots[static_cast<size_t>(q)]),
                        "interpolation: held-out sample mismatch (weight " + std::to_string(W) + ")");
        }
    }
    return out;
}

// balanced rational reconstruction: n/d with n = d*x mod M, |n|, d <= sqrt(M/2)
inline mpq_class rational_reconstruct(const mpz_class& x, const mpz_class& M) {
    mpz_class bound = sqrt(M / 2);
    mpz_class r0 = M, r1 = x % M, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    GONAL_CHECK(t1 != 0, "rational reconstruction failed");
    mpz_class num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    GONAL_CHECK(abs(num) <= bound && den <= bound, "rational reconstruction out of range");
    mpq_class q(num, den);
    q.canonicalize();
    // denominators in this data are supported at 2 and 3 only
    mpz_class d = q.get_den();
    while (d % 2 == 0) d /= 2;
    while (d % 3 == 0) d /= 3;
    GONAL_CHECK(d == 1, "reconstructed denominator has a prime factor other than 2 and 3");
    return q;
}

}  // namespace qpre

// deterministic end-to-end precompute; the output is reproducible bit for bit
inline QuinticPrecomputation precompute_quintic_data() {
    using namespace qpre;
    // 62-bit primes; the last is reserved for the independent certification pass
    const std::array<int64_t, 4> primes = {4611686018427387847, 4611686018427387817,
                                           4611686018427387787, 4611686018427387761};
    const int n_compute = 3;
    const int max_weight = 46;
    const int n_extra = 12;

    // weight classes and their poly slots
    std::vector<std::vector<PolySlot>> slots_by_weight(max_weight + 1);
    for (int j = 0; j < 6; j++)
        slots_by_weight[static_cast<size_t>(quintic_res_weight(j))].push_back(PolySlot{true, j, 0, 0});
    for (int r = 0; r < 5; r++)
        for (int q = 0; q < 10; q++) {
            int i = pair_list()[static_cast<size_t>(q)][0], j = pair_list()[static_cast<size_t>(q)][1];
            slots_by_weight[static_cast<size_t>(quintic_m_weight(r, i, j))].push_back(PolySlot{false, 0, r, q});
        }

    std::vector<std::vector<std::array<int32_t, 5>>> monos_by_weight(max_weight + 1);
    size_t n_max = 0;
    for (int W = 0; W <= max_weight; W++)
        if (!slots_by_weight[static_cast<size_t>(W)].empty()) {
            monos_by_weight[static_cast<size_t>(W)] = monomials_of_weight(W);
            n_max = std::max(n_max, monos_by_weight[static_cast<size_t>(W)].size());
        }

    // per prime: interpolate every slot; results indexed [prime][weight][slot][mono]
    std::vector<std::vector<std::vector<std::vector<int64_t>>>> coef(static_cast<size_t>(n_compute));
    for (int pi = 0; pi < n_compute; pi++) {
        FpRing F(primes[static_cast<size_t>(pi)]);
        rng64 rng(0x5eed0000u + static_cast<uint64_t>(pi));
        std::vector<Sample> samples;
        samples.reserve(n_max + static_cast<size_t>(n_extra));
        while (samples.size() < n_max + static_cast<size_t>(n_extra)) {
            std::array<int64_t, 5> roots;
            for (auto& x : roots) x = int64_t(rng.below(static_cast<uint64_t>(F.p)));
            std::set<int64_t> dist(roots.begin(), roots.end());
            if (dist.size() != 5) continue;
            samples.push_back(eval_sample(F, roots, max_weight));
        }
        coef[static_cast<size_t>(pi)].resize(static_cast<size_t>(max_weight) + 1);
        for (int W = 0; W <= max_weight; W++) {
            const auto& slots = slots_by_weight[static_cast<size_t>(W)];
            if (slots.empty()) continue;
            coef[static_cast<size_t>(pi)][static_cast<size_t>(W)] = interpolate_weight(
                F, samples, W, monos_by_weight[static_cast<size_t>(W)], slots, n_extra);
        }
    }

    // CRT and rational reconstruction
    mpz_class M = 1;
    for (int pi = 0; pi < n_compute; pi++) M *= primes[static_cast<size_t>(pi)];
    std::array<mpz_class, 3> crt_mul;
    for (int pi = 0; pi < n_compute; pi++) {
        mpz_class Mi = M / primes[static_cast<size_t>(pi)];
        mpz_class inv;
        mpz_class pz(static_cast<long>(primes[static_cast<size_t>(pi)]));
        GONAL_CHECK(mpz_invert(inv.get_mpz_t(), Mi.get_mpz_t(), pz.get_mpz_t()) != 0,
                    "CRT moduli are not coprime");
        crt_mul[static_cast<size_t>(pi)] = Mi * inv;
    }
    auto lift = [&](const std::array<int64_t, 3>& xs) {
        mpz_class X = 0;
        for (int pi = 0; pi < n_compute; pi++)
            X += crt_mul[static_cast<size_t>(pi)] * xs[static_cast<size_t>(pi)];
        X %= M;
        if (X < 0) X += M;
        return rational_reconstruct(X, M);
    };

    QuinticPrecomputation D;
    for (int W = 0; W <= max_weight; W++) {
        const auto& slots = slots_by_weight[static_cast<size_t>(W)];
        if (slots.empty()) continue;
        const auto& monos = monos_by_weight[static_cast<size_t>(W)];
        for (size_t q = 0; q < slots.size(); q++) {
            FPoly P;
            for (size_t m = 0; m < monos.size(); m++) {
                std::array<int64_t, 3> xs;
                for (int pi = 0; pi < n_compute; pi++)
                    xs[static_cast<size_t>(pi)] = coef[static_cast<size_t>(pi)][static_cast<size_t>(W)][q][m];
                if (!xs[0] && !xs[1] && !xs[2]) continue;
                mpq_class c = lift(xs);
                GONAL_CHECK(c != 0, "CRT lift: zero from nonzero residues");
                P.terms.push_back(FTerm{c, monos[m]});
            }
            const PolySlot& slot = slots[q];
            if (slot.is_res)
                D.res[static_cast<size_t>(slot.res_j)] = P;
            else {
                int i = pair_list()[static_cast<size_t>(slot.pair)][0];
                int j = pair_list()[static_cast<size_t>(slot.pair)][1];
                auto& Mr = D.m[static_cast<size_t>(slot.r)];
                Mr[static_cast<size_t>(i)][static_cast<size_t>(j)] = P;
                FPoly N = P;
                for (auto& t : N.terms) t.c = -t.c;
                Mr[static_cast<size_t>(j)][static_cast<size_t>(i)] = N;
            }
        }
    }

    // certification against the reserved prime on fresh samples
    {
        FpRing F(primes[3]);
        rng64 rng(0xcafe5u);
        int checked = 0;
        while (checked < 24) {
            std::array<int64_t, 5> roots;
            for (auto& x : roots) x = int64_t(rng.below(static_cast<uint64_t>(F.p)));
            std::set<int64_t> dist(roots.begin(), roots.end());
            if (dist.size() != 5) continue;
            Sample S = eval_sample(F, roots, max_weight);
            std::array<int64_t, 5> fv = S.f;
            auto eval_mod = [&](const FPoly& P) {
                int64_t acc = 0;
                for (const auto& t : P.terms) {
                    mpz_class pz(static_cast<long>(F.p));
                    mpz_class num = t.c.get_num() % pz, den = t.c.get_den() % pz;
                    if (num < 0) num += pz;
                    int64_t v = F.mul(num.get_si(), F.inv(den.get_si()));
                    for (int var = 0; var < 5; var++)
                        for (int32_t e = 0; e < t.e[static_cast<size_t>(var)]; e++)
                            v = F.mul(v, fv[static_cast<size_t>(var)]);
                    acc = F.add(acc, v);
                }
                return acc;
            };
            for (int j = 0; j < 6; j++)
                GONAL_CHECK(eval_mod(D.res[static_cast<size_t>(j)]) == S.res[static_cast<size_t>(j)],
                            "certification: resolvent coefficient mismatch");
            for (int r = 0; r < 5; r++)
                for (int q = 0; q < 10; q++) {
                    int i = pair_list()[static_cast<size_t>(q)][0], j = pair_list()[static_cast<size_t>(q)][1];
                    GONAL_CHECK(eval_mod(D.m[static_cast<size_t>(r)][static_cast<size_t>(i)][static_cast<size_t>(j)]) ==
                                    S.c[static_cast<size_t>(q)][static_cast<size_t>(r)],
                                "certification: matrix entry mismatch");
                }
            checked++;
        }
    }
    return D;
}

}  // namespace gonal
