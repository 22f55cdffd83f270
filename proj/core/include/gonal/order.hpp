// Orders in the etale algebra A = k(x)[y]/(F), F monic of degree d in y with
// k[x] coefficients.  An order is a full k[x]-lattice closed under
// multiplication, stored as a lower triangular basis matrix over k[x] with a
// common monic denominator.  Maximalization follows the classical round-2
// scheme: radical of O/DO, then its idealizer, iterated until stable.
//
// Over a finite field the moduli D are the irreducible factors of the
// discriminant.  In characteristic zero we only take squarefree parts and do
// linear algebra over k[x]/D pretending it is a field; inverting a zero
// divisor throws quot_split and the modulus is refined (dynamic splitting).
#pragma once

#include <vector>

#include "gonal/fq.hpp"
#include "gonal/fq_factor.hpp"
#include "gonal/matrix.hpp"
#include "gonal/numberfield.hpp"
#include "gonal/poly.hpp"
#include "gonal/ring.hpp"
#include "gonal/util.hpp"

namespace gonal {

template <class k>
struct quot_split {
    Poly<k> factor;
};

// B = k[x]/(D) with D squarefree.  A genuine field when D is irreducible;
// otherwise inv() throws quot_split on zero divisors.
template <class k>
struct QuotField {
    using Elem = Poly<k>;
    static constexpr bool char_zero = k::char_zero;

    k base;
    Poly<k> D;

    QuotField(const k& b, const Poly<k>& mod) : base(b), D(poly_monic(b, mod)) {
        GONAL_CHECK(D.deg() >= 1, "quot: modulus must be nonconstant");
    }

    Elem reduce(const Poly<k>& a) const { return poly_mod(base, a, D); }
    Elem zero() const { return poly_zero(base); }
    Elem one() const { return poly_one(base); }
    Elem from_base(const typename k::Elem& c) const { return poly_const(base, c); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(base, a, b); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base, a, b); }
    Elem neg(const Elem& a) const { return poly_neg(base, a); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(poly_mul(base, a, b)); }
    Elem inv(const Elem& a) const {
        GONAL_CHECK(!a.is_zero(), "quot: division by zero");
        Poly<k> u, v;
        Poly<k> g = poly_xgcd(base, a, D, u, v);
        if (g.deg() > 0) throw quot_split<k>{g};
        return reduce(u);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    std::string str(const Elem& a) const { return poly_str(base, a); }
};

// Monic curve equation y^d + a[d-1] y^{d-1} + ... + a[0] with precomputed
// reductions of y^e for e <= 2d-2.
template <class k>
struct CurveEq {
    int d;
    std::vector<Poly<k>> a;                       // size d
    std::vector<std::vector<Poly<k>>> ypow;       // ypow[e][j], e <= 2d-2, j < d

    CurveEq(const k& K, std::vector<Poly<k>> coeffs) : d(int(coeffs.size())), a(std::move(coeffs)) {
        GONAL_CHECK(d >= 2, "curve: degree must be at least 2");
        ypow.assign(static_cast<size_t>(2 * d - 1), std::vector<Poly<k>>(static_cast<size_t>(d), poly_zero(K)));
        for (int e = 0; e < d; ++e) ypow[size_t(e)][size_t(e)] = poly_one(K);
        for (int e = d; e <= 2 * d - 2; ++e) {
            // y^e = y * y^(e-1), then fold the y^d term via y^d = -sum a_j y^j
            std::vector<Poly<k>> prev = ypow[size_t(e - 1)];
            Poly<k> top = prev[size_t(d - 1)];
            for (int j = d - 1; j >= 1; --j) ypow[size_t(e)][size_t(j)] = prev[size_t(j - 1)];
            ypow[size_t(e)][0] = poly_zero(K);
            for (int j = 0; j < d; ++j)
                ypow[size_t(e)][size_t(j)] =
                    poly_sub(K, ypow[size_t(e)][size_t(j)], poly_mul(K, top, a[size_t(j)]));
        }
    }

    // product of two y-coordinate vectors (length d, k[x] entries)
    std::vector<Poly<k>> mul_ycoords(const k& K, const std::vector<Poly<k>>& u,
                                     const std::vector<Poly<k>>& v) const {
        std::vector<Poly<k>> raw(static_cast<size_t>(2 * d - 1), poly_zero(K));
        for (int i = 0; i < d; ++i) {
            if (u[size_t(i)].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (v[size_t(j)].is_zero()) continue;
                raw[size_t(i + j)] =
                    poly_add(K, raw[size_t(i + j)], poly_mul(K, u[size_t(i)], v[size_t(j)]));
            }
        }
        std::vector<Poly<k>> out(static_cast<size_t>(d), poly_zero(K));
        for (int e = 0; e <= 2 * d - 2; ++e) {
            if (raw[size_t(e)].is_zero()) continue;
            for (int j = 0; j < d; ++j)
                out[size_t(j)] =
                    poly_add(K, out[size_t(j)], poly_mul(K, raw[size_t(e)], ypow[size_t(e)][size_t(j)]));
        }
        return out;
    }

    Poly<k> discriminant_y(const k& K) const {
        std::vector<Poly<k>> f(a);
        f.push_back(poly_one(K));
        std::vector<Poly<k>> fy;
        for (int i = 1; i <= d; ++i) {
            Poly<k> c = (i == d) ? poly_one(K) : a[size_t(i)];
            Poly<k> ic = poly_scale(K, K.from_int(i), c);
            fy.push_back(ic);
        }
        while (!fy.empty() && fy.back().is_zero()) fy.pop_back();
        GONAL_CHECK(!fy.empty(), "curve: dF/dy vanishes");
        PolyRing1<k> R(K);
        Poly<k> res = sylvester_resultant(R, f, fy);
        // disc = (-1)^(d(d-1)/2) res(F, F_y) for monic F; the sign does not
        // matter for moduli selection but keep it exact
        if ((int64_t(d) * (d - 1) / 2) % 2 == 1) res = poly_neg(K, res);
        return res;
    }
};

// Basis rows M[i][*]/den in y-power coordinates, lower triangular HNF with
// monic diagonal; row 0 is the element 1 for any genuine order.
template <class k>
struct OrderBasis {
    std::vector<std::vector<Poly<k>>> M;
    Poly<k> den;
    int dim() const { return int(M.size()); }
};

template <class k>
bool order_eq(const k& K, const OrderBasis<k>& A, const OrderBasis<k>& B) {
    if (A.dim() != B.dim() || !poly_eq(K, A.den, B.den)) return false;
    for (size_t i = 0; i < A.M.size(); ++i)
        for (size_t j = 0; j < A.M[i].size(); ++j)
            if (!poly_eq(K, A.M[i][j], B.M[i][j])) return false;
    return true;
}

// HNF of a spanning set of rows (full rank d required): lower triangular,
// monic diagonal, off-diagonal entries reduced modulo the diagonal below.
template <class k>
std::vector<std::vector<Poly<k>>> hnf_rows(const k& K, std::vector<std::vector<Poly<k>>> rows, int d) {
    std::vector<std::vector<Poly<k>>> out(static_cast<size_t>(d));
    std::vector<char> assigned(rows.size(), 0);
    for (int c = d - 1; c >= 0; --c) {
        std::vector<size_t> act;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!assigned[i] && !rows[i][size_t(c)].is_zero()) act.push_back(i);
        GONAL_CHECK(!act.empty(), "hnf: rank deficient set of rows");
        while (act.size() > 1) {
            // eliminate the highest degree entry with the lowest degree one
            size_t lo = act[0], hi = act[0];
            for (size_t i : act) {
                if (rows[i][size_t(c)].deg() < rows[lo][size_t(c)].deg()) lo = i;
                if (rows[i][size_t(c)].deg() > rows[hi][size_t(c)].deg()) hi = i;
            }
            if (hi == lo)
                for (size_t i : act)
                    if (i != lo) {
                        hi = i;
                        break;
                    }
            const Poly<k>& plo = rows[lo][size_t(c)];
            const Poly<k>& phi = rows[hi][size_t(c)];
            typename k::Elem f = K.div(poly_lc(K, phi), poly_lc(K, plo));
            int sh = phi.deg() - plo.deg();
            for (int j = 0; j <= c; ++j) {
                Poly<k> t = poly_mul(K, poly_scale(K, f, poly_xpow(K, sh)), rows[lo][size_t(j)]);
                rows[hi][size_t(j)] = poly_sub(K, rows[hi][size_t(j)], t);
            }
            act.clear();
            for (size_t i = 0; i < rows.size(); ++i)
                if (!assigned[i] && !rows[i][size_t(c)].is_zero()) act.push_back(i);
            GONAL_CHECK(!act.empty(), "hnf: cancellation wiped the column");
        }
        size_t keep = act[0];
        typename k::Elem ilc = K.inv(poly_lc(K, rows[keep][size_t(c)]));
        for (int j = 0; j <= c; ++j) rows[keep][size_t(j)] = poly_scale(K, ilc, rows[keep][size_t(j)]);
        out[size_t(c)] = rows[keep];
        assigned[keep] = 1;
        rows[keep].assign(static_cast<size_t>(d), poly_zero(K));  // drop from lower columns
    }
    // reduce entries left of each pivot
    for (int j = 1; j < d; ++j)
        for (int i = j - 1; i >= 0; --i) {
            Poly<k> q, r;
            poly_divrem(K, out[size_t(j)][size_t(i)], out[size_t(i)][size_t(i)], q, r);
            if (q.is_zero()) continue;
            for (int t = 0; t <= i; ++t)
                out[size_t(j)][size_t(t)] =
                    poly_sub(K, out[size_t(j)][size_t(t)], poly_mul(K, q, out[size_t(i)][size_t(t)]));
        }
    return out;
}

template <class k>
OrderBasis<k> order_normalize(const k& K, std::vector<std::vector<Poly<k>>> rows, Poly<k> den, int d) {
    auto M = hnf_rows(K, std::move(rows), d);
    Poly<k> g = den;
    for (auto& row : M)
        for (auto& e : row) g = poly_gcd(K, g, e);
    if (g.deg() > 0) {
        den = poly_div_exact(K, den, g);
        for (auto& row : M)
            for (auto& e : row) e = poly_div_exact(K, e, g);
    }
    typename k::Elem ilc = K.inv(poly_lc(K, den));
    den = poly_scale(K, ilc, den);
    for (auto& row : M)
        for (auto& e : row) e = poly_scale(K, ilc, e);
    // diagonal stays monic only up to the rescale; redo row scaling
    for (int i = 0; i < d; ++i) {
        typename k::Elem s = K.inv(poly_lc(K, M[size_t(i)][size_t(i)]));
        for (auto& e : M[size_t(i)]) e = poly_scale(K, s, e);
    }
    return OrderBasis<k>{std::move(M), std::move(den)};
}

template <class k>
OrderBasis<k> equation_order(const k& K, int d) {
    std::vector<std::vector<Poly<k>>> M(static_cast<size_t>(d), std::vector<Poly<k>>(static_cast<size_t>(d), poly_zero(K)));
    for (int i = 0; i < d; ++i) M[size_t(i)][size_t(i)] = poly_one(K);
    return OrderBasis<k>{std::move(M), poly_one(K)};
}

// structure constants: sc[i][j] = coordinates of b_i b_j in the basis of O
template <class k>
std::vector<std::vector<std::vector<Poly<k>>>> order_mult_table(const k& K, const CurveEq<k>& C,
                                                                const OrderBasis<k>& O) {
    int d = C.d;
    auto solve_in_basis = [&](const std::vector<Poly<k>>& w) {
        // solve c . M = w exactly (M lower triangular), then divide by den
        std::vector<Poly<k>> c(static_cast<size_t>(d), poly_zero(K));
        std::vector<Poly<k>> rem = w;
        for (int j = d - 1; j >= 0; --j) {
            Poly<k> cj = poly_div_exact(K, rem[size_t(j)], O.M[size_t(j)][size_t(j)]);
            for (int t = 0; t <= j; ++t)
                rem[size_t(t)] = poly_sub(K, rem[size_t(t)], poly_mul(K, cj, O.M[size_t(j)][size_t(t)]));
            c[size_t(j)] = poly_div_exact(K, cj, O.den);
        }
        return c;
    };
    std::vector<std::vector<std::vector<Poly<k>>>> sc(
        static_cast<size_t>(d), std::vector<std::vector<Poly<k>>>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            auto prod = C.mul_ycoords(K, O.M[size_t(i)], O.M[size_t(j)]);
            sc[size_t(i)][size_t(j)] = solve_in_basis(prod);
            sc[size_t(j)][size_t(i)] = sc[size_t(i)][size_t(j)];
        }
    return sc;
}

namespace detail {

// multiplication of coordinate vectors over B using structure constants
template <class k>
std::vector<Poly<k>> sc_mul(const QuotField<k>& B,
                            const std::vector<std::vector<std::vector<Poly<k>>>>& sc,
                            const std::vector<Poly<k>>& u, const std::vector<Poly<k>>& v) {
    int d = int(u.size());
    std::vector<Poly<k>> w(static_cast<size_t>(d), B.zero());
    for (int i = 0; i < d; ++i) {
        if (B.is_zero(u[size_t(i)])) continue;
        for (int j = 0; j < d; ++j) {
            if (B.is_zero(v[size_t(j)])) continue;
            Poly<k> uv = B.mul(u[size_t(i)], v[size_t(j)]);
            for (int t = 0; t < d; ++t) {
                if (sc[size_t(i)][size_t(j)][size_t(t)].is_zero()) continue;
                w[size_t(t)] = B.add(w[size_t(t)],
                                     B.mul(uv, B.reduce(sc[size_t(i)][size_t(j)][size_t(t)])));
            }
        }
    }
    return w;
}

// radical of O/DO as rows over B: characteristic p via the p-power kernel
inline Mat<QuotField<FqField>> radical_kernel(const QuotField<FqField>& B,
                                              const std::vector<std::vector<std::vector<Poly<FqField>>>>& sc,
                                              int d) {
    const FqField& K = B.base;
    int64_t p = K.fp.p;
    int m = 0;
    int64_t pm = 1;
    while (pm < d) {
        pm *= p;
        ++m;
    }
    // phi(b_j) = b_j^(p^m) via structure constants
    Mat<QuotField<FqField>> A = mat_zero(B, static_cast<size_t>(d), static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        std::vector<Poly<FqField>> e(static_cast<size_t>(d), B.zero()), acc(static_cast<size_t>(d), B.zero());
        e[size_t(j)] = B.one();
        acc[0] = B.one();
        int64_t left = pm;
        std::vector<Poly<FqField>> base = e;
        while (left) {
            if (left & 1) acc = sc_mul(B, sc, acc, base);
            base = sc_mul(B, sc, base, base);
            left >>= 1;
        }
        for (int i = 0; i < d; ++i) A.at(size_t(i), size_t(j)) = acc[size_t(i)];
    }
    Mat<QuotField<FqField>> mu = mat_kernel(B, A);
    // pull back mu = lambda^(p^m): lambda = mu^(p^t), t = -m mod ord
    int64_t ord = int64_t(K.n) * B.D.deg();
    int64_t t = ((-int64_t(m)) % ord + ord) % ord;
    mpz_class pt;
    mpz_ui_pow_ui(pt.get_mpz_t(), unsigned(p), unsigned(t));
    auto limbs = mpz_to_limbs(pt);
    for (size_t i = 0; i < mu.m; ++i)
        for (size_t j = 0; j < mu.n; ++j)
            mu.at(i, j) = poly_powmod_limbs(K, mu.at(i, j), limbs, B.D);
    return mu;
}

// characteristic zero: radical = kernel of the trace form
inline Mat<QuotField<NumberFieldQ>> radical_kernel(const QuotField<NumberFieldQ>& B,
                                                   const std::vector<std::vector<std::vector<Poly<NumberFieldQ>>>>& sc,
                                                   int d) {
    // tau[i] = trace of b_i
    std::vector<Poly<NumberFieldQ>> tau(static_cast<size_t>(d), B.zero());
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t)
            tau[size_t(i)] = B.add(tau[size_t(i)], B.reduce(sc[size_t(i)][size_t(t)][size_t(t)]));
    Mat<QuotField<NumberFieldQ>> G = mat_zero(B, static_cast<size_t>(d), static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            Poly<NumberFieldQ> g = B.zero();
            for (int u = 0; u < d; ++u) {
                if (sc[size_t(i)][size_t(j)][size_t(u)].is_zero()) continue;
                g = B.add(g, B.mul(B.reduce(sc[size_t(i)][size_t(j)][size_t(u)]), tau[size_t(u)]));
            }
            G.at(size_t(i), size_t(j)) = g;
            G.at(size_t(j), size_t(i)) = g;
        }
    return mat_kernel(B, G);
}

}  // namespace detail

// one radical+idealizer refinement of O at squarefree modulus D;
// returns true if the order grew
template <class k>
bool round2_step(const k& K, const CurveEq<k>& C, OrderBasis<k>& O, const Poly<k>& D) {
    int d = C.d;
    QuotField<k> B(K, D);
    auto sc = order_mult_table(K, C, O);
    Mat<QuotField<k>> rad = detail::radical_kernel(B, sc, d);

    // J = HNF basis of the radical ideal (includes D*O)
    std::vector<std::vector<Poly<k>>> jrows;
    for (size_t i = 0; i < rad.m; ++i) {
        std::vector<Poly<k>> row(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) row[size_t(j)] = rad.at(i, size_t(j));
        jrows.push_back(std::move(row));
    }
    for (int i = 0; i < d; ++i) {
        std::vector<Poly<k>> row(static_cast<size_t>(d), poly_zero(K));
        row[size_t(i)] = B.D;
        jrows.push_back(std::move(row));
    }
    auto J = hnf_rows(K, std::move(jrows), d);

    // T_a rows: coordinates of b_i * gamma_a in the J basis (exact over k[x])
    auto solve_in_J = [&](const std::vector<Poly<k>>& w) {
        std::vector<Poly<k>> c(static_cast<size_t>(d), poly_zero(K));
        std::vector<Poly<k>> rem = w;
        for (int j = d - 1; j >= 0; --j) {
            Poly<k> cj = poly_div_exact(K, rem[size_t(j)], J[size_t(j)][size_t(j)]);
            for (int t = 0; t <= j; ++t)
                rem[size_t(t)] = poly_sub(K, rem[size_t(t)], poly_mul(K, cj, J[size_t(j)][size_t(t)]));
            c[size_t(j)] = cj;
        }
        return c;
    };

    // columns = candidate coefficients c_i, rows = conditions (a, u):
    // sum_i c_i (b_i gamma_a)_u = 0 mod D in J coordinates
    Mat<QuotField<k>> big = mat_zero(B, static_cast<size_t>(d) * static_cast<size_t>(d), static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) {
        for (int i = 0; i < d; ++i) {
            // z = coords of b_i * gamma_a in O basis
            std::vector<Poly<k>> z(static_cast<size_t>(d), poly_zero(K));
            for (int t = 0; t < d; ++t) {
                if (J[size_t(a)][size_t(t)].is_zero()) continue;
                for (int u = 0; u < d; ++u)
                    z[size_t(u)] = poly_add(
                        K, z[size_t(u)],
                        poly_mul(K, J[size_t(a)][size_t(t)], sc[size_t(i)][size_t(t)][size_t(u)]));
            }
            auto w = solve_in_J(z);
            for (int u = 0; u < d; ++u) big.at(size_t(a * d + u), size_t(i)) = B.reduce(w[size_t(u)]);
        }
    }
    Mat<QuotField<k>> ker = mat_kernel(B, big);
    if (ker.m == 0) return false;

    // candidate enlargement: rows of O plus (c . M)/D rows, denominator den*D
    std::vector<std::vector<Poly<k>>> rows;
    for (int i = 0; i < d; ++i) {
        std::vector<Poly<k>> row(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) row[size_t(j)] = poly_mul(K, O.M[size_t(i)][size_t(j)], B.D);
        rows.push_back(std::move(row));
    }
    for (size_t r = 0; r < ker.m; ++r) {
        std::vector<Poly<k>> row(static_cast<size_t>(d), poly_zero(K));
        for (int i = 0; i < d; ++i) {
            const Poly<k>& ci = ker.at(r, size_t(i));
            if (ci.is_zero()) continue;
            for (int j = 0; j < d; ++j)
                row[size_t(j)] = poly_add(K, row[size_t(j)], poly_mul(K, ci, O.M[size_t(i)][size_t(j)]));
        }
        rows.push_back(std::move(row));
    }
    OrderBasis<k> O2 = order_normalize(K, std::move(rows), poly_mul(K, O.den, B.D), d);
    if (order_eq(K, O2, O)) return false;
    O = std::move(O2);
    return true;
}

// D-maximal overorder of O (D squarefree); characteristic zero splits D on demand
template <class k>
void round2_at_modulus(const k& K, const CurveEq<k>& C, OrderBasis<k>& O, Poly<k> D) {
    D = poly_monic(K, D);
    if (D.deg() == 0) return;
    for (int it = 0; it < 200; ++it) {
        try {
            if (!round2_step(K, C, O, D)) return;
        } catch (const quot_split<k>& s) {
            Poly<k> g = poly_monic(K, poly_gcd(K, s.factor, D));
            GONAL_CHECK(g.deg() > 0 && g.deg() < D.deg(), "round2: bad split factor");
            round2_at_modulus(K, C, O, g);
            round2_at_modulus(K, C, O, poly_div_exact(K, D, g));
            return;
        }
    }
    throw internal_error("round2: did not stabilize");
}

// Yun squarefree decomposition in characteristic zero: f = prod g_i^i
template <class k>
std::vector<std::pair<Poly<k>, int>> yun_squarefree(const k& K, const Poly<k>& fin) {
    static_assert(k::char_zero);
    std::vector<std::pair<Poly<k>, int>> out;
    Poly<k> f = poly_monic(K, fin);
    if (f.deg() <= 0) return out;
    Poly<k> fp = poly_derivative(K, f);
    Poly<k> g = poly_gcd(K, f, fp);
    Poly<k> w = poly_div_exact(K, f, g);
    Poly<k> y = poly_div_exact(K, fp, g);
    int i = 1;
    while (w.deg() > 0) {
        Poly<k> z = poly_sub(K, y, poly_derivative(K, w));
        Poly<k> h = poly_gcd(K, w, z);
        if (h.deg() > 0) out.push_back({h, i});
        y = poly_div_exact(K, z, h);
        w = poly_div_exact(K, w, h);
        ++i;
    }
    return out;
}

inline std::vector<std::pair<Poly<FqField>, int>> disc_moduli(const FqField& K, const Poly<FqField>& disc) {
    return fq_factor(K, disc);
}
inline std::vector<std::pair<Poly<NumberFieldQ>, int>> disc_moduli(const NumberFieldQ& K,
                                                                   const Poly<NumberFieldQ>& disc) {
    return yun_squarefree(K, disc);
}

// the maximal order of k(x)[y]/(F) over k[x]
template <class k>
OrderBasis<k> maximal_order(const k& K, const CurveEq<k>& C) {
    Poly<k> disc = C.discriminant_y(K);
    GONAL_CHECK(!disc.is_zero(), "order: discriminant vanishes, F is not squarefree in y");
    OrderBasis<k> O = equation_order(K, C.d);
    for (auto& [D, v] : disc_moduli(K, disc)) {
        if (v < 2) continue;
        round2_at_modulus(K, C, O, D);
    }
    // sanity: the first basis element of an order is 1
    GONAL_CHECK(poly_eq(K, O.M[0][0], O.den), "order: basis does not start with 1");
    for (int j = 1; j < C.d; ++j) GONAL_CHECK(O.M[0][size_t(j)].is_zero(), "order: bad first row");
    return O;
}

}  // namespace gonal
