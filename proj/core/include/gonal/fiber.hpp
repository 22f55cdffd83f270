// Fiber factorization patterns of a plane model f = sum_j f[j](x) y^j over a
// finite field: at x = x0 the fiber polynomial is univariate in y, and its
// pattern is the sorted multiset of (degree, multiplicity) over the
// irreducible factors.  Two models of the same cover agree at every x0 where
// both leading coefficients are nonzero.
#pragma once

#include <algorithm>
#include <vector>

#include "gonal/fq.hpp"
#include "gonal/fq_factor.hpp"
#include "gonal/poly.hpp"

namespace gonal {

using FiberPattern = std::vector<std::pair<int, int>>;  // (degree, multiplicity)

inline Poly<FqField> fiber_polynomial(const FqField& K, const std::vector<Poly<FqField>>& f,
                                      const FqField::Elem& x0) {
    std::vector<FqField::Elem> c;
    for (const auto& fj : f) c.push_back(poly_eval(K, fj, x0));
    return poly_from(K, c);
}

inline bool fiber_admissible(const FqField& K, const std::vector<Poly<FqField>>& f,
                             const FqField::Elem& x0) {
    GONAL_CHECK(!f.empty(), "fiber: empty model");
    return !K.is_zero(poly_eval(K, f.back(), x0));
}

inline FiberPattern fiber_pattern(const FqField& K, const std::vector<Poly<FqField>>& f,
                                  const FqField::Elem& x0, uint64_t seed = 1) {
    Poly<FqField> g = fiber_polynomial(K, f, x0);
    GONAL_CHECK(g.deg() == int(f.size()) - 1, "fiber: leading coefficient vanishes at x0");
    FiberPattern out;
    for (const auto& [h, mult] : fq_factor(K, g, seed)) out.push_back({h.deg(), mult});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gonal
