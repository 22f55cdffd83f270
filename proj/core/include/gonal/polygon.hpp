// Newton polygon helpers: support of a plane model, convex hull, and the
// lattice interior point count (via Pick's theorem).  For a plane model that
// is nondegenerate with respect to its Newton polygon, the interior count
// equals the geometric genus.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gonal/poly.hpp"
#include "gonal/util.hpp"

namespace gonal {

using LatticePoint = std::pair<int64_t, int64_t>;

// support of f = sum_j f[j](x) y^j as (x-exponent, y-exponent) pairs
template <class k>
std::vector<LatticePoint> model_support(const k& K, const std::vector<Poly<k>>& f) {
    std::vector<LatticePoint> pts;
    for (size_t j = 0; j < f.size(); ++j)
        for (int i = 0; i <= f[j].deg(); ++i)
            if (!K.is_zero(poly_coeff(K, f[j], i))) pts.push_back({int64_t(i), int64_t(j)});
    return pts;
}

inline int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// monotone chain; returns hull vertices in counterclockwise order, no repeats
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> h(2 * n);
    size_t m = 0;
    for (size_t i = 0; i < n; ++i) {
        while (m >= 2 && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    for (size_t i = n - 1, t = m + 1; i-- > 0;) {
        while (m >= t && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    h.resize(m - 1);
    return h;
}

// p strictly inside a counterclockwise hull of size >= 3
inline bool inside_hull_strict(const std::vector<LatticePoint>& h, const LatticePoint& p) {
    if (h.size() < 3) return false;
    for (size_t i = 0; i < h.size(); ++i)
        if (cross(h[i], h[(i + 1) % h.size()], p) <= 0) return false;
    return true;
}

// number of lattice points strictly inside the convex hull of pts
// (Pick: A = I + B/2 - 1, computed with 2A and B integers)
inline int64_t interior_lattice_count(const std::vector<LatticePoint>& pts) {
    auto h = convex_hull(pts);
    if (h.size() < 3) return 0;
    int64_t twice_area = 0, boundary = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        twice_area += a.first * b.second - b.first * a.second;
        boundary += std::gcd(std::abs(b.first - a.first), std::abs(b.second - a.second));
    }
    GONAL_CHECK(twice_area > 0 && (twice_area - boundary) % 2 == 0, "polygon: bad hull");
    return (twice_area - boundary + 2) / 2;
}

}  // namespace gonal
