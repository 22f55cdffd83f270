// End to end pipeline: hypothesis gates, parametrized models, characteristic
// zero lifts, elimination back to plane equations, and the verification
// suite.  Every randomized step takes an explicit seed, so runs are
// reproducible end to end.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gonal/cubic.hpp"
#include "gonal/fiber.hpp"
#include "gonal/fq_factor.hpp"
#include "gonal/lift.hpp"
#include "gonal/quartic.hpp"
#include "gonal/quintic.hpp"
#include "gonal/util.hpp"

namespace gonal {

// ---------------------------------------------------------------- reports

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back(CheckResult{std::move(name), pass, std::move(witness)});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct InvariantProfile {
    int d = 0;
    int64_t p = 0;
    int n = 1;
    int64_t genus = 0;
    std::vector<int64_t> maroni;
    std::vector<int64_t> schreyer;  // empty for d = 3
    int64_t branch_degree = 0;      // = 2g + 2d - 2 on accepted input
    bool branch_at_infinity = false;
    std::vector<std::pair<std::string, int>> branch_points;  // (factor, degree)
};

// ------------------------------------------------- order local structure

// structure constants of a maximal order in its own basis; entries are
// polynomials because the order is closed under multiplication
template <class k>
std::vector<std::vector<std::vector<Poly<k>>>> order_mult_table(const k& K, const CurveEq<k>& C,
                                                                const OrderBasis<k>& O) {
    RatFunField<k> R(K);
    size_t d = size_t(C.d);
    GONAL_CHECK(O.M.size() == d, "order: basis size mismatch");
    Mat<RatFunField<k>> B = mat_zero(R, d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) B.at(i, j) = R.make(O.M[i][j], O.den);
    Mat<RatFunField<k>> Binv = mat_inverse(R, B);
    std::vector<std::vector<std::vector<Poly<k>>>> table(
        d, std::vector<std::vector<Poly<k>>>(d, std::vector<Poly<k>>(d)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            std::vector<typename RatFunField<k>::Elem> u(d), v(d);
            for (size_t t = 0; t < d; ++t) {
                u[t] = B.at(i, t);
                v[t] = B.at(j, t);
            }
            auto prod = mul_coords_in_field(R, C, u, v);
            for (size_t t = 0; t < d; ++t) {
                typename RatFunField<k>::Elem c = R.zero();
                for (size_t s = 0; s < d; ++s) c = R.add(c, R.mul(prod[s], Binv.at(s, t)));
                GONAL_CHECK(R.is_poly(c), "order: structure constant has a denominator");
                table[i][j][t] = R.to_poly(c);
                table[j][i][t] = table[i][j][t];
            }
        }
    return table;
}

// determinant of the trace form Gram matrix on the order basis
template <class k>
Poly<k> order_discriminant(const k& K, const CurveEq<k>& C, const OrderBasis<k>& O) {
    RatFunField<k> R(K);
    size_t d = size_t(C.d);
    std::vector<Poly<k>> tr = newton_traces(K, C, 2 * int(d) - 2);
    Mat<RatFunField<k>> G = mat_zero(R, d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            typename RatFunField<k>::Elem s = R.zero();
            for (size_t a = 0; a < d; ++a) {
                if (O.M[i][a].is_zero()) continue;
                for (size_t b = 0; b < d; ++b) {
                    if (O.M[j][b].is_zero()) continue;
                    Poly<k> t = poly_mul(K, poly_mul(K, O.M[i][a], O.M[j][b]), tr[a + b]);
                    s = R.add(s, R.from_poly(t));
                }
            }
            G.at(i, j) = R.div(s, R.from_poly(poly_mul(K, O.den, O.den)));
        }
    typename RatFunField<k>::Elem det = mat_det(R, G);
    GONAL_CHECK(R.is_poly(det), "order: discriminant has a denominator");
    return R.to_poly(det);
}

// -------------------------------------------------------- branch analysis

struct BranchFactor {
    Poly<FqField> pi;  // monic irreducible in x, or in u for the point at infinity
    bool at_infinity = false;
    int valuation = 0;  // multiplicity in the order discriminant
    int etale_dim = 0;  // residue-field dimension of the reduced quotient of O/pi
};

struct BranchProfile {
    int64_t genus = 0;
    int64_t branch_degree = 0;  // sum of deg(pi) over branch factors
    bool simple = true;
    std::string witness;
    std::vector<BranchFactor> factors;
};

// dimension over F_q[x]/(pi) of the reduced quotient of O/pi, computed from
// the radical: nilpotency index is at most d, so the radical is the kernel of
// the Frobenius power p^s >= d, which linearizes over the prime field
inline int reduced_quotient_dim(const FqField& F, int d,
                                const std::vector<std::vector<std::vector<Poly<FqField>>>>& table,
                                const Poly<FqField>& pi) {
    int m = pi.deg();
    GONAL_CHECK(m >= 1, "branch: factor must be nonconstant");
    size_t N = size_t(d) * size_t(m);
    using Elem = std::vector<Poly<FqField>>;  // coordinates over the order basis, deg < m
    auto mul_A = [&](const Elem& u, const Elem& v) {
        Elem out(size_t(d));
        for (int i = 0; i < d; ++i) {
            if (u[size_t(i)].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (v[size_t(j)].is_zero()) continue;
                Poly<FqField> w = poly_mod(F, poly_mul(F, u[size_t(i)], v[size_t(j)]), pi);
                if (w.is_zero()) continue;
                for (int t = 0; t < d; ++t) {
                    const Poly<FqField>& c = table[size_t(i)][size_t(j)][size_t(t)];
                    if (c.is_zero()) continue;
                    out[size_t(t)] = poly_add(
                        F, out[size_t(t)], poly_mod(F, poly_mul(F, w, c), pi));
                }
            }
        }
        return out;
    };
    int64_t P = 1;
    while (P < d) P *= F.fp.p;
    Mat<FqField> rows = mat_zero(F, N, N);
    for (int kk = 0; kk < d; ++kk)
        for (int a = 0; a < m; ++a) {
            Elem e(size_t(d));
            e[size_t(kk)] = poly_xpow(F, a);
            // e^P by square and multiply
            Elem acc(size_t(d));
            acc[0] = poly_one(F);
            Elem sq = e;
            for (int64_t w = P; w > 0; w >>= 1) {
                if (w & 1) acc = mul_A(acc, sq);
                if (w > 1) sq = mul_A(sq, sq);
            }
            size_t r = size_t(kk) * size_t(m) + size_t(a);
            for (int t = 0; t < d; ++t)
                for (int c = 0; c <= acc[size_t(t)].deg(); ++c)
                    rows.at(r, size_t(t) * size_t(m) + size_t(c)) = acc[size_t(t)].c[size_t(c)];
        }
    Mat<FqField> ker = mat_kernel(F, mat_transpose(F, rows));
    size_t rad = ker.m;
    GONAL_CHECK((N - rad) % size_t(m) == 0, "branch: radical is not a residue-field subspace");
    return int((N - rad) / size_t(m));
}

// Branch behavior of the cover on both patches: the branch locus is the
// radical of the maximal order discriminant; a cover is simply branched when
// every branch factor appears with valuation 1 (tame, one simple point) and
// the reduced quotient of the maximal order has residue dimension exactly
// d - 1 there, with total branch degree 2g + 2d - 2.
inline BranchProfile branch_profile(const FqField& F, const CurveEq<FqField>& C,
                                    const ReducedBasis<FqField>& rb, uint64_t seed = 1) {
    BranchProfile out;
    out.genus = rb.genus;
    int d = C.d;
    auto fail = [&](const std::string& w) {
        out.simple = false;
        if (out.witness.empty()) out.witness = w;
    };

    auto scan_patch = [&](const CurveEq<FqField>& CE, const OrderBasis<FqField>& O,
                          bool infinite) {
        Poly<FqField> disc = order_discriminant(F, CE, O);
        if (disc.is_zero()) {
            fail(infinite ? "order discriminant vanishes at infinity" : "order discriminant vanishes");
            return;
        }
        auto table = order_mult_table(F, CE, O);
        std::vector<std::pair<Poly<FqField>, int>> factors = fq_factor(F, disc, seed);
        for (const auto& [pi, val] : factors) {
            if (pi.deg() < 1) continue;
            if (infinite) {
                // only u = 0 is new on the infinite patch
                bool is_u = pi.deg() == 1 && F.is_zero(pi.c[0]);
                if (!is_u) continue;
            }
            BranchFactor bf;
            bf.pi = pi;
            bf.at_infinity = infinite;
            bf.valuation = val;
            bf.etale_dim = reduced_quotient_dim(F, d, table, pi);
            if (bf.valuation != 1)
                fail("branch factor " + poly_str(F, pi) +
                     (infinite ? " at infinity" : "") + " has discriminant valuation " +
                     std::to_string(val));
            if (bf.etale_dim != d - 1)
                fail("fiber algebra at " + poly_str(F, pi) + (infinite ? " (infinity)" : "") +
                     " has reduced dimension " + std::to_string(bf.etale_dim));
            out.branch_degree += pi.deg();
            out.factors.push_back(std::move(bf));
        }
    };

    scan_patch(C, rb.finite_order, false);
    InfinitePatch<FqField> inf = infinite_patch(F, C);
    scan_patch(inf.curve, rb.infinite_order, true);

    int64_t expect = 2 * out.genus + 2 * d - 2;
    if (out.branch_degree != expect)
        fail("branch degree " + std::to_string(out.branch_degree) + " differs from " +
             std::to_string(expect));
    return out;
}

// gate form: monicize, require geometric irreducibility, then the branch
// profile; throws gate_rejected with a concrete witness
inline BranchProfile check_simply_branched(const FqField& F, const std::vector<Poly<FqField>>& f,
                                           uint64_t seed = 1) {
    GONAL_CHECK(f.size() >= 3, "cover: y-degree must be at least 2");
    if (f.back().is_zero()) throw malformed_input("cover: leading y-coefficient is zero");
    CurveEq<FqField> C(F, monicize_coeffs(F, f));
    if (C.discriminant_y(F).is_zero())
        throw gate_rejected("cover: model is not separable in y");
    ReducedBasis<FqField> rb = reduced_basis(F, C);
    if (rb.zero_count != 1)
        throw gate_rejected("cover: input is reducible or has a constant field extension");
    BranchProfile bp = branch_profile(F, C, rb, seed);
    if (!bp.simple) throw gate_rejected("cover is not simply branched: " + bp.witness);
    return bp;
}

// ------------------------------------------------------- field utilities

inline std::vector<FqField::Elem> all_field_elements(const FqField& F) {
    GONAL_CHECK(F.q_fits_u64() && F.q_u64() <= (uint64_t(1) << 20),
                "field too large to enumerate");
    std::vector<FqField::Elem> out;
    out.reserve(size_t(F.q_u64()));
    for (uint64_t i = 0; i < F.q_u64(); ++i) {
        FqField::Elem x(size_t(F.n), 0);
        uint64_t w = i;
        for (int j = 0; j < F.n; ++j, w /= uint64_t(F.fp.p)) x[size_t(j)] = int64_t(w % uint64_t(F.fp.p));
        out.push_back(std::move(x));
    }
    return out;
}

inline bool fiber_mult_free(const FiberPattern& p) {
    for (const auto& [deg, mult] : p)
        if (mult > 1) return false;
    return true;
}

// Compare factorization patterns of two plane models of the same cover at
// every x0 where both are admissible and both fibers are multiplicity free
// (on multiple fibers a plane projection may identify points).  Returns the
// number of compared points, or -1 with a witness on the first mismatch.
inline int matched_fiber_points(const FqField& F, const std::vector<Poly<FqField>>& a,
                                const std::vector<Poly<FqField>>& b,
                                std::string* witness = nullptr) {
    int compared = 0;
    for (const auto& x0 : all_field_elements(F)) {
        if (!fiber_admissible(F, a, x0) || !fiber_admissible(F, b, x0)) continue;
        FiberPattern pa = fiber_pattern(F, a, x0);
        FiberPattern pb = fiber_pattern(F, b, x0);
        if (!fiber_mult_free(pa) || !fiber_mult_free(pb)) continue;
        if (pa != pb) {
            if (witness) *witness = "fiber patterns differ at x0 = " + F.str(x0);
            return -1;
        }
        ++compared;
    }
    return compared;
}

// quadratic extension F_{q^2} together with the embedding F_q -> F_{q^2},
// given by the image of the residue of t (a deterministic root of the base
// modulus in the extension)
struct FieldExtension {
    FqField E;
    FqField::Elem root;  // image of t
};

inline bool fp_poly_irreducible(const FqField& Fp, const Poly<FqField>& g) {
    // Frobenius criterion over the prime field: x^(p^deg) = x mod g and no
    // proper Frobenius fixed subfield at maximal prime divisors
    int64_t p = Fp.fp.p;
    int dd = g.deg();
    auto frob_pow = [&](int e) {
        Poly<FqField> x = poly_xpow(Fp, 1);
        Poly<FqField> acc = x;
        for (int i = 0; i < e; ++i) {
            // acc <- acc^p mod g
            Poly<FqField> r = poly_one(Fp);
            Poly<FqField> sq = acc;
            for (int64_t w = p; w > 0; w >>= 1) {
                if (w & 1) r = poly_mod(Fp, poly_mul(Fp, r, sq), g);
                if (w > 1) sq = poly_mod(Fp, poly_mul(Fp, sq, sq), g);
            }
            acc = r;
        }
        return acc;
    };
    Poly<FqField> x = poly_xpow(Fp, 1);
    if (!poly_eq(Fp, frob_pow(dd), x)) return false;
    for (int r = 2; r <= dd; ++r) {
        if (dd % r != 0) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime) continue;
        Poly<FqField> h = poly_sub(Fp, frob_pow(dd / r), x);
        if (h.is_zero()) return false;
        if (poly_gcd(Fp, h, g).deg() > 0) return false;
    }
    return true;
}

inline FieldExtension quadratic_extension(const FqField& F, uint64_t seed = 1) {
    int64_t p = F.fp.p;
    int deg = 2 * F.n;
    FqField Fp(p);
    rng64 rng(seed);
    Poly<FqField> g;
    for (int tries = 0;; ++tries) {
        GONAL_CHECK(tries < 4096, "extension: no irreducible modulus found");
        std::vector<FqField::Elem> c;
        for (int i = 0; i < deg; ++i) c.push_back(Fp.from_int(int64_t(rng.below(uint64_t(p)))));
        c.push_back(Fp.one());
        g = poly_from(Fp, c);
        if (fp_poly_irreducible(Fp, g)) break;
    }
    std::vector<int64_t> mod;
    for (const auto& ci : g.c) mod.push_back(ci[0]);
    FqField E(p, mod);
    // deterministic root of the base modulus in E
    std::vector<FqField::Elem> mc;
    for (int64_t ci : F.mod) mc.push_back(E.from_int(ci));
    Poly<FqField> mbar = poly_from(E, mc);
    FqField::Elem root = E.zero();
    if (mbar.deg() == 1) {
        root = E.neg(mbar.c[0]);
    } else {
        auto roots = fq_roots(E, mbar, seed);
        GONAL_CHECK(!roots.empty(), "extension: base modulus has no root");
        std::sort(roots.begin(), roots.end());
        root = roots.front();
    }
    return FieldExtension{std::move(E), std::move(root)};
}

inline FqField::Elem embed_elem(const FieldExtension& X, const FqField::Elem& a) {
    FqField::Elem acc = X.E.zero();
    FqField::Elem pw = X.E.one();
    for (size_t i = 0; i < a.size(); ++i) {
        acc = X.E.add(acc, X.E.mul(X.E.from_int(a[i]), pw));
        pw = X.E.mul(pw, X.root);
    }
    return acc;
}

inline std::vector<Poly<FqField>> embed_model(const FieldExtension& X,
                                              const std::vector<Poly<FqField>>& f) {
    std::vector<Poly<FqField>> out;
    out.reserve(f.size());
    for (const auto& fi : f) {
        Poly<FqField> r;
        for (const auto& c : fi.c) r.c.push_back(embed_elem(X, c));
        poly_trim(X.E, r);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------- random covers

template <class k>
Poly<k> sample_poly(const k& K, int64_t maxdeg, rng64& rng, int64_t p, int n) {
    if (maxdeg < 0) return Poly<k>{};
    std::vector<typename k::Elem> c;
    for (int64_t j = 0; j <= maxdeg; ++j) {
        typename k::Elem e = K.zero();
        for (int i = 0; i < n; ++i) e[size_t(i)] = int64_t(rng.below(uint64_t(p)));
        c.push_back(std::move(e));
    }
    return poly_from(K, c);
}

// substitute y -> y + u(x) in an ascending coefficient list
template <class k>
std::vector<Poly<k>> shift_y(const k& K, const std::vector<Poly<k>>& f, const Poly<k>& u) {
    size_t d = f.size() - 1;
    std::vector<std::vector<int64_t>> binom(d + 1, std::vector<int64_t>(d + 1, 0));
    for (size_t i = 0; i <= d; ++i) {
        binom[i][0] = 1;
        for (size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<Poly<k>> out(d + 1, Poly<k>{});
    for (size_t i = 0; i <= d; ++i) {
        if (f[i].is_zero()) continue;
        Poly<k> upow = poly_one(K);
        for (size_t j = 0; j <= i; ++j) {
            // contribution of f_i (y + u)^i to y^(i - j): C(i, j) f_i u^j
            size_t tgt = i - j;
            Poly<k> term = poly_scale(K, K.from_int(binom[i][j]), poly_mul(K, f[i], upow));
            out[tgt] = poly_add(K, out[tgt], term);
            if (j < i) upow = poly_mul(K, upow, u);
        }
    }
    return out;
}

inline std::vector<int64_t> balanced_maroni(int d, int64_t g) {
    // sum e_i = g + d - 1 over d - 1 entries, ascending, as equal as possible
    int64_t total = g + d - 1;
    std::vector<int64_t> e(size_t(d - 1), total / (d - 1));
    int64_t extra = total % (d - 1);
    for (int64_t i = 0; i < extra; ++i) e[e.size() - 1 - size_t(i)] += 1;
    std::sort(e.begin(), e.end());
    return e;
}

inline std::vector<int64_t> balanced_schreyer(int d, int64_t g) {
    if (d == 4) {
        int64_t total = g - 5;
        std::vector<int64_t> b = {total / 2, total - total / 2};
        std::sort(b.begin(), b.end());
        return b;
    }
    if (d == 5) {
        int64_t total = 2 * g - 12;
        std::vector<int64_t> b(5, total / 5);
        int64_t extra = total % 5;
        for (int64_t i = 0; i < extra; ++i) b[b.size() - 1 - size_t(i)] += 1;
        std::sort(b.begin(), b.end());
        return b;
    }
    return {};
}

struct RandomCoverSpec {
    int d = 3;
    std::vector<int64_t> maroni;    // target profile; balanced genus 6 when empty
    std::vector<int64_t> schreyer;  // target profile for d = 4, 5
    int budget = 400;
    int64_t scramble_degree = 2;
};

// Rejection sampler for simply branched covers with prescribed invariants:
// draw the parametrizing structure with entry degrees from the profile's
// bounds, eliminate to a plane model, scramble y by a random substitution,
// and accept only when irreducibility, genus, invariants, and the branch
// profile all match.  Throws degenerate_model when the budget runs out.
inline std::vector<Poly<FqField>> random_cover(const FqField& F, const QuinticPrecomputation* qd,
                                               RandomCoverSpec spec, rng64& rng) {
    GONAL_CHECK(spec.d >= 3 && spec.d <= 5, "random cover: y-degree must be 3, 4, or 5");
    int d = spec.d;
    if (spec.maroni.empty()) spec.maroni = balanced_maroni(d, 6);
    GONAL_CHECK(int(spec.maroni.size()) == d - 1, "random cover: invariant profile size");
    int64_t g = 0;
    for (int64_t e : spec.maroni) g += e;
    g -= d - 1;
    if (d >= 4 && spec.schreyer.empty()) spec.schreyer = balanced_schreyer(d, g);
    if (d == 5) GONAL_CHECK(qd != nullptr, "random cover: quintic table required");
    int64_t p = F.fp.p;

    for (int tries = 0; tries < spec.budget; ++tries) {
        std::vector<Poly<FqField>> plane;
        try {
            if (d == 3) {
                std::vector<Poly<FqField>> f(4);
                for (int i = 0; i <= 3; ++i)
                    f[size_t(i)] = sample_poly(
                        F, trigonal_degree_bound(spec.maroni[0], spec.maroni[1], i), rng, p, F.n);
                plane = std::move(f);
            } else if (d == 4) {
                std::array<std::vector<Poly<FqField>>, 2> q;
                for (int l = 0; l < 2; ++l) {
                    q[size_t(l)].assign(9, Poly<FqField>{});
                    for (int i = 0; i < 3; ++i)
                        for (int j = i; j < 3; ++j) {
                            Poly<FqField> u = sample_poly(
                                F, quadric_degree_bound(spec.maroni, spec.schreyer, l, i, j), rng,
                                p, F.n);
                            q[size_t(l)][size_t(3 * i + j)] = u;
                            q[size_t(l)][size_t(3 * j + i)] = u;
                        }
                }
                plane = quadric_plane_model(F, q);
            } else {
                std::array<std::vector<Poly<FqField>>, 4> m;
                for (int l = 0; l < 4; ++l) {
                    m[size_t(l)].assign(25, Poly<FqField>{});
                    for (int i = 0; i < 5; ++i)
                        for (int j = i + 1; j < 5; ++j) {
                            Poly<FqField> u = sample_poly(
                                F, pfaffian_degree_bound(spec.maroni, spec.schreyer, g, l, i, j),
                                rng, p, F.n);
                            m[size_t(l)][size_t(5 * i + j)] = u;
                            m[size_t(l)][size_t(5 * j + i)] = poly_neg(F, u);
                        }
                }
                plane = pfaffian_plane_model(F, m);
            }
            if (plane.back().is_zero()) continue;
            Poly<FqField> u = sample_poly(F, spec.scramble_degree, rng, p, F.n);
            plane = shift_y(F, plane, u);

            CurveEq<FqField> C(F, monicize_coeffs(F, plane));
            if (C.discriminant_y(F).is_zero()) continue;
            ReducedBasis<FqField> rb = reduced_basis(F, C);
            if (rb.zero_count != 1 || rb.genus != g || rb.maroni != spec.maroni) continue;
            if (!branch_profile(F, C, rb, rng.next()).simple) continue;
            if (d == 4) {
                QuadricModel<FqField> QM = bhargava_quadric_model(F, plane);
                if (QM.b != spec.schreyer) continue;
            } else if (d == 5) {
                PfaffianModel<FqField> M5 = bhargava_pfaffian_model(F, *qd, plane);
                if (M5.b != spec.schreyer) continue;
            }
            return plane;
        } catch (const gate_rejected&) {
        } catch (const degenerate_model&) {
        }
    }
    throw degenerate_model("random cover: retry budget exhausted for the requested profile");
}

// ------------------------------------------------------------- lift bundle

struct LiftBundle {
    int d = 0;
    // parametrizing structure over F_q and its centered lift
    std::vector<Poly<FqField>> form_f;  // d = 3
    std::vector<Poly<NumberFieldQ>> form_k;
    std::array<std::vector<Poly<FqField>>, 2> pair_f;  // d = 4
    std::array<std::vector<Poly<NumberFieldQ>>, 2> pair_k;
    std::array<std::vector<Poly<FqField>>, 4> quad_f;  // d = 5
    std::array<std::vector<Poly<NumberFieldQ>>, 4> quad_k;
    std::vector<int64_t> maroni, schreyer;
    int64_t genus = 0;
    std::vector<Poly<FqField>> pre_f;       // canonical eliminated model over F_q
    std::vector<Poly<NumberFieldQ>> pre_k;  // canonical eliminated model over K
    PlaneModel<NumberFieldQ> plane;         // monic lift with discriminant data
    // d = 3: integral bases of the lifted curve on both patches
    std::vector<std::vector<Poly<NumberFieldQ>>> basis_finite, basis_infinite;
};

struct PipelineOptions {
    bool deep_fibers = false;
    uint64_t seed = 1;
};

struct PipelineResult {
    InvariantProfile profile;
    LiftBundle bundle;
    VerificationReport report;
};

// characteristic zero squarefree decomposition (Yun), for the index
// certificate; returns (factor, multiplicity) with factors monic
template <class k>
std::vector<std::pair<Poly<k>, int>> squarefree_decomp_char0(const k& K, Poly<k> a) {
    static_assert(k::char_zero);
    std::vector<std::pair<Poly<k>, int>> out;
    if (a.deg() < 1) return out;
    a = poly_monic(K, a);
    Poly<k> da = poly_derivative(K, a);
    Poly<k> g = poly_gcd(K, a, da);
    Poly<k> w = poly_div_exact(K, a, g);
    Poly<k> y = poly_div_exact(K, da, g);
    int i = 1;
    while (w.deg() > 0) {
        Poly<k> z = poly_sub(K, y, poly_derivative(K, w));
        Poly<k> f = poly_gcd(K, w, z);
        if (f.deg() > 0) out.push_back({f, i});
        w = poly_div_exact(K, w, f);
        y = poly_div_exact(K, z, f);
        ++i;
    }
    return out;
}

template <class k>
bool is_perfect_square_char0(const k& K, const Poly<k>& a) {
    if (a.is_zero()) return false;
    if (a.deg() % 2 != 0) return false;
    for (const auto& [f, m] : squarefree_decomp_char0(K, a))
        if (m % 2 != 0) return false;
    return true;
}

// ------------------------------------------------------------ verification

template <class k>
std::vector<Poly<k>> monic_nonleading(const std::vector<Poly<k>>& q) {
    return std::vector<Poly<k>>(q.begin(), q.end() - 1);
}

// The full consistency suite for a lifted cover; never throws, every failed
// check carries a witness.
inline VerificationReport verify_lift(const FieldTower& T, const std::vector<Poly<FqField>>& input,
                                      const LiftBundle& B, const PipelineOptions& opt) {
    const FqField& F = T.F;
    const NumberFieldQ& K = T.K;
    VerificationReport rep;
    int d = B.d;

    // shared context: the reduced lift
    std::vector<Poly<FqField>> redpre;
    std::optional<PlaneModel<FqField>> qbar;
    std::optional<ReducedBasis<FqField>> rbbar;
    std::string ctx_err;
    try {
        redpre = reduce_plane_model(T, B.pre_k);
        qbar = monicize_plane_model(F, redpre);
        CurveEq<FqField> C(F, monic_nonleading(qbar->q));
        rbbar = reduced_basis(F, C);
    } catch (const std::exception& e) {
        ctx_err = e.what();
    }

    // 1: elimination commutes with reduction mod p
    {
        bool pass = ctx_err.empty();
        std::string w = ctx_err;
        if (pass) {
            pass = redpre.size() == B.pre_f.size();
            for (size_t j = 0; pass && j < redpre.size(); ++j)
                if (!poly_eq(F, redpre[j], B.pre_f[j])) {
                    pass = false;
                    w = "coefficient of y^" + std::to_string(j) + " differs after reduction";
                }
            if (!pass && w.empty()) w = "y-degree differs after reduction";
        }
        rep.add("reduction compatibility", pass, w);
    }

    // 2: lift support and degree bound certificates
    {
        bool pass = true;
        std::string w;
        auto check_poly_pair = [&](const Poly<FqField>& a, const Poly<NumberFieldQ>& b,
                                   int64_t bound, const std::string& where) {
            if (!pass) return;
            if (b.deg() != a.deg()) {
                pass = false;
                w = "lift changes degree at " + where;
                return;
            }
            if (!poly_eq(F, reduce_poly(T, b), a)) {
                pass = false;
                w = "lift does not reduce back at " + where;
                return;
            }
            if (bound >= 0 && a.deg() > bound) {
                pass = false;
                w = "degree bound violated at " + where + ": " + std::to_string(a.deg()) +
                    " > " + std::to_string(bound);
            } else if (bound < 0 && !a.is_zero()) {
                pass = false;
                w = "entry must vanish at " + where;
            }
        };
        if (d == 3) {
            for (int i = 0; i <= 3; ++i)
                check_poly_pair(B.form_f[size_t(i)], B.form_k[size_t(i)],
                                trigonal_degree_bound(B.maroni[0], B.maroni[1], i),
                                "y^" + std::to_string(i));
        } else if (d == 4) {
            for (int l = 0; l < 2; ++l)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        check_poly_pair(B.pair_f[size_t(l)][size_t(3 * i + j)],
                                        B.pair_k[size_t(l)][size_t(3 * i + j)],
                                        quadric_degree_bound(B.maroni, B.schreyer, l, i, j),
                                        "q" + std::to_string(l) + "[" + std::to_string(i) + "," +
                                            std::to_string(j) + "]");
        } else {
            for (int l = 0; l < 4; ++l)
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) {
                        if (i == j) continue;
                        check_poly_pair(
                            B.quad_f[size_t(l)][size_t(5 * i + j)],
                            B.quad_k[size_t(l)][size_t(5 * i + j)],
                            pfaffian_degree_bound(B.maroni, B.schreyer, B.genus, l, i, j),
                            "m" + std::to_string(l) + "[" + std::to_string(i) + "," +
                                std::to_string(j) + "]");
                    }
        }
        rep.add("lift support and degree bounds", pass, w);
    }

    // 3: genus preserved and the reduced lift stays geometrically irreducible
    {
        bool pass = false;
        std::string w = ctx_err;
        if (rbbar) {
            pass = rbbar->genus == B.genus && rbbar->zero_count == 1;
            if (rbbar->zero_count != 1)
                w = "reduction of the lift is not geometrically irreducible";
            else if (rbbar->genus != B.genus)
                w = "genus " + std::to_string(rbbar->genus) + " differs from " +
                    std::to_string(B.genus);
        }
        rep.add("genus preservation mod p", pass, w);
    }

    // 4: fiber patterns of the input and of the reduced lift agree
    {
        bool pass = false;
        std::string w = ctx_err;
        if (qbar) {
            int cnt = matched_fiber_points(F, input, qbar->q, &w);
            pass = cnt > 0;
            if (cnt == 0) w = "no admissible multiplicity free fibers to compare";
            if (pass && opt.deep_fibers) {
                FieldExtension X = quadratic_extension(F, opt.seed);
                int cnt2 = matched_fiber_points(X.E, embed_model(X, input),
                                                embed_model(X, qbar->q), &w);
                pass = cnt2 > 0;
                if (cnt2 == 0) w = "no comparable fibers over the quadratic extension";
            }
        }
        rep.add("fiber patterns", pass, w);
    }

    // 5: r(x) reduces squarefree with full degree
    {
        bool pass = false;
        std::string w = ctx_err;
        try {
            Poly<FqField> rbar = reduce_poly(T, B.plane.r);
            if (rbar.deg() != B.plane.r.deg())
                w = "degree of r drops mod p";
            else if (!poly_eq(F, fq_squarefree_part(F, rbar), poly_monic(F, rbar)))
                w = "r mod p is not squarefree";
            else
                pass = true;
        } catch (const std::exception& e) {
            w = e.what();
        }
        rep.add("r mod p squarefree of full degree", pass, w);
    }

    // 6: the reduced lift is still simply branched with the same accounting
    {
        bool pass = false;
        std::string w = ctx_err;
        if (qbar && rbbar) {
            CurveEq<FqField> C(F, monic_nonleading(qbar->q));
            BranchProfile bp = branch_profile(F, C, *rbbar, opt.seed);
            pass = bp.simple && bp.branch_degree == 2 * B.genus + 2 * d - 2;
            if (!pass) w = bp.witness.empty() ? "branch accounting differs" : bp.witness;
        }
        rep.add("branch behavior mod p", pass, w);
    }

    // 7 (d = 3): characteristic zero reduced basis and index certificate
    if (d == 3) {
        bool pass = false;
        std::string w;
        try {
            CurveEq<NumberFieldQ> CK(K, monic_nonleading(B.plane.q));
            ReducedBasis<NumberFieldQ> rbK = reduced_basis(K, CK);
            if (rbK.zero_count != 1)
                w = "lifted curve is not geometrically irreducible";
            else if (rbK.genus != B.genus)
                w = "characteristic zero genus " + std::to_string(rbK.genus) + " differs from " +
                    std::to_string(B.genus);
            else if (rbK.maroni != B.maroni)
                w = "characteristic zero scroll invariants differ";
            else {
                Poly<NumberFieldQ> discO = order_discriminant(K, CK, rbK.finite_order);
                Poly<NumberFieldQ> idx2 = poly_div_exact(K, B.plane.delta, discO);
                InfinitePatch<NumberFieldQ> inf = infinite_patch(K, CK);
                Poly<NumberFieldQ> discI = order_discriminant(K, inf.curve, rbK.infinite_order);
                Poly<NumberFieldQ> deltaI = inf.curve.discriminant_y(K);
                Poly<NumberFieldQ> idx2i = poly_div_exact(K, deltaI, discI);
                if (!is_perfect_square_char0(K, poly_monic(K, idx2)))
                    w = "finite index certificate is not a perfect square";
                else if (!is_perfect_square_char0(K, poly_monic(K, idx2i)))
                    w = "index certificate at infinity is not a perfect square";
                else
                    pass = true;
            }
        } catch (const std::exception& e) {
            w = e.what();
        }
        rep.add("integral bases over the lift", pass, w);
    }

    return rep;
}

// ---------------------------------------------------------------- pipeline

inline PipelineResult run_pipeline(const FieldTower& T, int d,
                                   const std::vector<Poly<FqField>>& f,
                                   const QuinticPrecomputation* qd, const PipelineOptions& opt) {
    const FqField& F = T.F;
    const NumberFieldQ& K = T.K;
    if (d < 3 || d > 5) throw malformed_input("pipeline: y-degree must be 3, 4, or 5");
    if (f.size() != size_t(d) + 1) throw malformed_input("pipeline: coefficient list size");
    if (f.back().is_zero()) throw malformed_input("pipeline: leading y-coefficient is zero");

    BranchProfile gate = check_simply_branched(F, f, opt.seed);

    PipelineResult out;
    LiftBundle& B = out.bundle;
    B.d = d;
    if (d == 3) {
        TrigonalModel<FqField> tri = trigonal_model(F, f);
        B.form_f = tri.f;
        B.form_k = lift_coeff_list(T, tri.f);
        B.maroni = {tri.e1, tri.e2};
        B.genus = tri.genus;
        B.pre_f = normalize_plane_model(F, tri.f);
        B.pre_k = normalize_plane_model(K, lift_coeff_list(T, B.pre_f));
    } else if (d == 4) {
        QuadricModel<FqField> QM = bhargava_quadric_model(F, f);
        B.pair_f = QM.q;
        B.pair_k = lift_quadric_pair(T, QM.q);
        B.maroni = QM.e;
        B.schreyer = QM.b;
        B.genus = QM.genus;
        B.pre_f = normalize_plane_model(F, quadric_plane_model(F, QM.q));
        B.pre_k = normalize_plane_model(K, quadric_plane_model(K, B.pair_k));
    } else {
        GONAL_CHECK(qd != nullptr, "pipeline: quintic table required for y-degree 5");
        PfaffianModel<FqField> M5 = bhargava_pfaffian_model(F, *qd, f);
        B.quad_f = M5.m;
        B.quad_k = lift_skew_quadruple(T, M5.m);
        B.maroni = M5.e;
        B.schreyer = M5.b;
        B.genus = M5.genus;
        B.pre_f = pfaffian_plane_model(F, M5.m);
        B.pre_k = pfaffian_plane_model(K, B.quad_k);
    }
    B.plane = monicize_plane_model(K, B.pre_k);
    if (d == 3) {
        TrigonalModel<NumberFieldQ> triK = trigonal_model(K, B.pre_k);
        B.basis_finite = triK.basis_finite;
        B.basis_infinite = triK.basis_infinite;
    }

    out.report = verify_lift(T, f, B, opt);

    InvariantProfile& pr = out.profile;
    pr.d = d;
    pr.p = F.fp.p;
    pr.n = F.n;
    pr.genus = B.genus;
    pr.maroni = B.maroni;
    pr.schreyer = B.schreyer;
    pr.branch_degree = gate.branch_degree;
    for (const auto& bf : gate.factors) {
        pr.branch_at_infinity = pr.branch_at_infinity || bf.at_infinity;
        pr.branch_points.push_back(
            {bf.at_infinity ? "infinity" : poly_str(F, bf.pi), bf.pi.deg()});
    }
    return out;
}

}  // namespace gonal
