// Support polytopes of the dehomogenized quadric pair live in
// (x-degree, Y1-exponent, Y2-exponent) space.  Such a polytope is the convex
// hull of vertical segments over a small set of exponent columns, so Minkowski
// sums and interior lattice point counts reduce to a planar hull plus exact
// evaluations of the upper and lower envelopes.  For a nondegenerate pair
// cutting out a curve, the interior count of the Minkowski sum equals the
// geometric genus (the two-surface analogue of the plane Baker bound).
#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "gonal/polygon.hpp"

namespace gonal {

using SupportPoint3 = std::array<int64_t, 3>;  // (x-degree, Y1-exp, Y2-exp)

// support of the ternary quadratic form with matrix q (3x3 row major,
// symmetric) after setting Y3 = 1; the monomial coefficient of Y_i Y_j with
// i != j is q[i][j] + q[j][i]
template <class k>
std::vector<SupportPoint3> quadric_support(const k& K, const std::vector<Poly<k>>& q) {
    GONAL_CHECK(q.size() == 9, "support: expected a 3x3 matrix");
    std::vector<SupportPoint3> pts;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            Poly<k> entry = (i == j) ? q[size_t(3 * i + j)]
                                     : poly_add(K, q[size_t(3 * i + j)], q[size_t(3 * j + i)]);
            int64_t l1 = (i == 0 ? 1 : 0) + (j == 0 ? 1 : 0);
            int64_t l2 = (i == 1 ? 1 : 0) + (j == 1 ? 1 : 0);
            for (int t = 0; t <= entry.deg(); ++t)
                if (!K.is_zero(poly_coeff(K, entry, t))) pts.push_back({int64_t(t), l1, l2});
        }
    return pts;
}

namespace detail {

struct col_seg {
    int64_t lo, hi;
};
using col_map = std::map<LatticePoint, col_seg>;

inline col_map columns_of(const std::vector<SupportPoint3>& pts) {
    col_map m;
    for (const auto& p : pts) {
        LatticePoint c{p[1], p[2]};
        auto it = m.find(c);
        if (it == m.end())
            m.emplace(c, col_seg{p[0], p[0]});
        else {
            it->second.lo = std::min(it->second.lo, p[0]);
            it->second.hi = std::max(it->second.hi, p[0]);
        }
    }
    return m;
}

// largest value at c of an affine interpolation of up to three columns whose
// hull contains c; this is the upper envelope of the polytope spanned by the
// column values (by Caratheodory in the column plane)
inline bool envelope_max(const std::vector<std::pair<LatticePoint, int64_t>>& v,
                         const LatticePoint& c, mpq_class& out) {
    bool found = false;
    auto upd = [&](const mpq_class& val) {
        if (!found || val > out) {
            out = val;
            found = true;
        }
    };
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i)
        if (v[i].first == c) upd(mpq_class(long(v[i].second)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const auto& p = v[i].first;
            const auto& q = v[j].first;
            if (cross(p, q, c) != 0) continue;
            int64_t dx = q.first - p.first, dy = q.second - p.second;
            int64_t den = (dx != 0) ? dx : dy;
            int64_t num = (dx != 0) ? (c.first - p.first) : (c.second - p.second);
            if (den == 0) continue;
            mpq_class t{mpz_class(num), mpz_class(den)};
            t.canonicalize();
            if (t < 0 || t > 1) continue;
            upd(mpq_class(long(v[i].second)) + t * (v[j].second - v[i].second));
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t l = j + 1; l < n; ++l) {
                int64_t T = cross(v[i].first, v[j].first, v[l].first);
                if (T == 0) continue;
                int64_t la = cross(v[j].first, v[l].first, c);
                int64_t lb = cross(v[l].first, v[i].first, c);
                int64_t lc = cross(v[i].first, v[j].first, c);
                if (T < 0) {
                    T = -T;
                    la = -la;
                    lb = -lb;
                    lc = -lc;
                }
                if (la < 0 || lb < 0 || lc < 0) continue;
                mpq_class val(mpz_class(la * v[i].second + lb * v[j].second + lc * v[l].second),
                              mpz_class(T));
                val.canonicalize();
                upd(val);
            }
    return found;
}

// number of integers a with lo < a < hi
inline int64_t integers_strictly_between(const mpq_class& lo, const mpq_class& hi) {
    if (cmp(lo, hi) >= 0) return 0;
    mpz_class lo_ceil, hi_floor;
    if (lo.get_den() == 1)
        lo_ceil = lo.get_num() + 1;
    else
        mpz_cdiv_q(lo_ceil.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    if (hi.get_den() == 1)
        hi_floor = hi.get_num() - 1;
    else
        mpz_fdiv_q(hi_floor.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    mpz_class cnt = hi_floor - lo_ceil + 1;
    return cnt > 0 ? int64_t(cnt.get_si()) : 0;
}

}  // namespace detail

// lattice points strictly inside the Minkowski sum of the convex hulls of two
// segment-supported point sets; 0 when the sum is not full dimensional
inline int64_t minkowski_interior_count(const std::vector<SupportPoint3>& P,
                                        const std::vector<SupportPoint3>& Q) {
    if (P.empty() || Q.empty()) return 0;
    detail::col_map cp = detail::columns_of(P), cq = detail::columns_of(Q);
    detail::col_map sum;
    for (const auto& [a, sa] : cp)
        for (const auto& [b, sb] : cq) {
            LatticePoint c{a.first + b.first, a.second + b.second};
            auto it = sum.find(c);
            if (it == sum.end())
                sum.emplace(c, detail::col_seg{sa.lo + sb.lo, sa.hi + sb.hi});
            else {
                it->second.lo = std::min(it->second.lo, sa.lo + sb.lo);
                it->second.hi = std::max(it->second.hi, sa.hi + sb.hi);
            }
        }

    std::vector<LatticePoint> cols;
    std::vector<std::pair<LatticePoint, int64_t>> his, neg_los;
    for (const auto& [c, s] : sum) {
        cols.push_back(c);
        his.push_back({c, s.hi});
        neg_los.push_back({c, -s.lo});
    }
    auto hull = convex_hull(cols);
    if (hull.size() < 3) return 0;

    int64_t lo1 = cols[0].first, hi1 = cols[0].first, lo2 = cols[0].second, hi2 = cols[0].second;
    for (const auto& c : cols) {
        lo1 = std::min(lo1, c.first);
        hi1 = std::max(hi1, c.first);
        lo2 = std::min(lo2, c.second);
        hi2 = std::max(hi2, c.second);
    }
    int64_t count = 0;
    for (int64_t u = lo1; u <= hi1; ++u)
        for (int64_t v = lo2; v <= hi2; ++v) {
            LatticePoint c{u, v};
            if (!inside_hull_strict(hull, c)) continue;
            mpq_class roof, neg_floor;
            bool okr = detail::envelope_max(his, c, roof);
            bool okf = detail::envelope_max(neg_los, c, neg_floor);
            GONAL_CHECK(okr && okf, "polytope: interior column not covered by the support");
            count += detail::integers_strictly_between(mpq_class(-neg_floor), roof);
        }
    return count;
}

}  // namespace gonal
