// Precomputed symbolic data for degree 5 covers: the coefficients of the
// Cayley sextic resolvent and the five naive-basis matrices of the resolvent
// map, as exact sparse polynomials in the coefficients f0..f4 of a monic
// quintic y^5 + f4 y^4 + ... + f0.  The data is generated once by the
// precompute engine, serialized to a versioned text file, and loaded here.
//
// Grading: f_k carries weight 5 - k.  The resolvent coefficient of y^j is
// isobaric of weight 4*(6-j); the matrix entry m[r][i][j] (0-based i, j for
// the basis elements y^{i+1}, y^{j+1} of the resolvent field) is isobaric of
// weight 18 + 4i + 4j - r.  Every polynomial stored here is checked against
// its expected weight at load time.
#pragma once
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gonal/poly.hpp"
#include "gonal/util.hpp"

namespace gonal {

struct FTerm {
    mpq_class c;
    std::array<int32_t, 5> e;  // exponents of f0..f4
};

struct FPoly {
    std::vector<FTerm> terms;  // sorted by exponent tuple, no zero coefficients

    bool is_zero() const { return terms.empty(); }
};

inline int64_t fterm_weight(const std::array<int32_t, 5>& e) {
    int64_t w = 0;
    for (int k = 0; k < 5; k++) w += int64_t(e[k]) * (5 - k);
    return w;
}

// version tag of the serialized format; bumped on any format change
inline const char* quintic_data_version() { return "gonal.quintic.v1"; }

struct QuinticPrecomputation {
    std::array<FPoly, 6> res;  // coefficient of y^j in the sextic resolvent, j = 0..5
    // m[r][i][j]: y^r component of the resolvent map on the naive basis pair
    // (y^{i+1}, y^{j+1}); skew in (i, j)
    std::array<std::array<std::array<FPoly, 5>, 5>, 5> m;
};

inline int64_t quintic_res_weight(int j) { return 4 * (6 - j); }
inline int64_t quintic_m_weight(int r, int i, int j) { return 18 + 4 * i + 4 * j - r; }

// maps an exact rational into any field with characteristic not dividing the
// denominator
template <class k>
typename k::Elem elem_from_mpq(const k& K, const mpq_class& v) {
    if constexpr (k::char_zero) {
        return K.from_q(v);
    } else {
        mpz_class p(static_cast<long>(K.p()));
        mpz_class num = v.get_num() % p, den = v.get_den() % p;
        if (num < 0) num += p;
        GONAL_CHECK(den != 0, "rational coefficient not defined in this characteristic");
        auto n = K.from_int(num.get_si());
        auto d = K.from_int(den.get_si());
        GONAL_CHECK(!K.is_zero(d), "rational coefficient not defined in this characteristic");
        return K.div(n, d);
    }
}

// power tables f_k^e for evaluating many sparse polynomials at the same
// polynomial arguments
template <class k>
struct FPowerTable {
    std::array<std::vector<Poly<k>>, 5> pw;  // pw[k][e] = f_k^e
};

template <class k>
FPowerTable<k> fpower_table(const k& K, const std::array<Poly<k>, 5>& f, int max_weight) {
    FPowerTable<k> T;
    for (int v = 0; v < 5; v++) {
        int cap = max_weight / (5 - v);
        T.pw[v].push_back(poly_one(K));
        for (int e = 1; e <= cap; e++) T.pw[v].push_back(poly_mul(K, T.pw[v].back(), f[v]));
    }
    return T;
}

template <class k>
Poly<k> eval_fpoly(const k& K, const FPoly& P, const FPowerTable<k>& T) {
    Poly<k> acc = poly_zero(K);
    // terms are sorted by exponents, so prefix products are shared
    std::array<Poly<k>, 5> pref;
    std::array<int32_t, 5> cur{-1, -1, -1, -1, -1};
    for (const auto& t : P.terms) {
        auto c = elem_from_mpq(K, t.c);
        if (K.is_zero(c)) continue;
        int v0 = 0;
        while (v0 < 5 && cur[v0] == t.e[v0]) ++v0;
        for (int v = v0; v < 5; ++v) {
            const Poly<k>& pw = T.pw[size_t(v)][static_cast<size_t>(t.e[v])];
            if (v == 0)
                pref[0] = pw;
            else if (t.e[v])
                pref[size_t(v)] = poly_mul(K, pref[size_t(v - 1)], pw);
            else
                pref[size_t(v)] = pref[size_t(v - 1)];
            cur[size_t(v)] = t.e[v];
        }
        acc = poly_add(K, acc, poly_scale(K, c, pref[4]));
    }
    return acc;
}

// scalar evaluation, used by the verification oracles
template <class k>
typename k::Elem eval_fpoly_at(const k& K, const FPoly& P, const std::array<typename k::Elem, 5>& f) {
    auto acc = K.zero();
    for (const auto& t : P.terms) {
        auto prod = elem_from_mpq(K, t.c);
        for (int v = 0; v < 5; v++)
            for (int32_t e = 0; e < t.e[v]; e++) prod = K.mul(prod, f[v]);
        acc = K.add(acc, prod);
    }
    return acc;
}

inline void serialize_fpoly(std::ostream& os, const std::string& tag, const FPoly& P) {
    os << tag << " " << P.terms.size() << "\n";
    for (const auto& t : P.terms) {
        os << t.c.get_num() << " " << t.c.get_den();
        for (int v = 0; v < 5; v++) os << " " << t.e[v];
        os << "\n";
    }
}

inline void serialize_quintic_data(std::ostream& os, const QuinticPrecomputation& D) {
    os << quintic_data_version() << "\n";
    for (int j = 0; j < 6; j++) serialize_fpoly(os, "res " + std::to_string(j), D.res[j]);
    for (int r = 0; r < 5; r++)
        for (int i = 0; i < 5; i++)
            for (int j = i + 1; j < 5; j++)
                serialize_fpoly(os,
                                "m " + std::to_string(r) + " " + std::to_string(i) + " " +
                                    std::to_string(j),
                                D.m[static_cast<size_t>(r)][static_cast<size_t>(i)]
                                   [static_cast<size_t>(j)]);
    os << "end\n";
}

inline FPoly parse_fpoly(std::istream& is, const std::string& want_tag, int64_t weight) {
    std::string line;
    GONAL_CHECK(std::getline(is, line), "quintic data: truncated file");
    std::istringstream hdr(line);
    std::string tag = "", idx, idx2, idx3;
    size_t nterms = 0;
    if (want_tag.substr(0, 3) == "res") {
        hdr >> tag >> idx >> nterms;
        GONAL_CHECK(tag + " " + idx == want_tag, "quintic data: unexpected section " + line);
    } else {
        hdr >> tag >> idx >> idx2 >> idx3 >> nterms;
        GONAL_CHECK(tag + " " + idx + " " + idx2 + " " + idx3 == want_tag,
                    "quintic data: unexpected section " + line);
    }
    FPoly P;
    P.terms.reserve(nterms);
    for (size_t t = 0; t < nterms; t++) {
        GONAL_CHECK(std::getline(is, line), "quintic data: truncated terms");
        std::istringstream ls(line);
        std::string num, den;
        FTerm term;
        ls >> num >> den;
        for (int v = 0; v < 5; v++) ls >> term.e[v];
        GONAL_CHECK(!ls.fail(), "quintic data: malformed term " + line);
        term.c = mpq_class(mpz_class(num), mpz_class(den));
        term.c.canonicalize();
        GONAL_CHECK(term.c != 0, "quintic data: zero coefficient stored");
        GONAL_CHECK(fterm_weight(term.e) == weight, "quintic data: term off the expected weight");
        if (t > 0) GONAL_CHECK(P.terms.back().e < term.e, "quintic data: terms out of order");
        P.terms.push_back(term);
    }
    return P;
}

inline QuinticPrecomputation parse_quintic_data(std::istream& is) {
    std::string line;
    GONAL_CHECK(std::getline(is, line), "quintic data: empty file");
    GONAL_CHECK(line == quintic_data_version(), "quintic data: unsupported version " + line);
    QuinticPrecomputation D;
    for (int j = 0; j < 6; j++)
        D.res[static_cast<size_t>(j)] =
            parse_fpoly(is, "res " + std::to_string(j), quintic_res_weight(j));
    for (int r = 0; r < 5; r++)
        for (int i = 0; i < 5; i++)
            for (int j = i + 1; j < 5; j++) {
                FPoly P = parse_fpoly(is,
                                      "m " + std::to_string(r) + " " + std::to_string(i) + " " +
                                          std::to_string(j),
                                      quintic_m_weight(r, i, j));
                auto& M = D.m[static_cast<size_t>(r)];
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] = P;
                for (auto& t : P.terms) t.c = -t.c;
                M[static_cast<size_t>(j)][static_cast<size_t>(i)] = P;
            }
    GONAL_CHECK(std::getline(is, line) && line == "end", "quintic data: missing end marker");
    return D;
}

inline QuinticPrecomputation load_quintic_data(const std::string& path) {
    std::ifstream is(path);
    GONAL_CHECK(is.good(), "quintic data: cannot open " + path);
    return parse_quintic_data(is);
}

}  // namespace gonal
