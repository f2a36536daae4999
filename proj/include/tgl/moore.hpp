#pragma once

// Formal wedge/smash bookkeeping for mod-p^r Moore spaces. A wedge is a
// dimension-indexed multiplicity map; the pairwise rule
// P^n ^ P^m = P^(n+m) v P^(n+m-1) holds for p odd and for p = 2 with r >= 2.
// The p = 2, r = 1 regime has no such rule and is refused loudly; the
// recorded triple-smash decomposition of the real projective plane routes
// around it.

#include <map>
#include <string>
#include <vector>

#include "tgl/common.hpp"
#include "tgl/free_lie.hpp"

namespace tgl {

enum class MooreRegime { OddP, TwoRGeq2, TwoR1 };

inline MooreRegime moore_regime(int p, int r) {
    require(is_prime(p), "moore: p must be prime");
    require(r >= 1, "moore: need r >= 1");
    if (p != 2)
        return MooreRegime::OddP;
    return r >= 2 ? MooreRegime::TwoRGeq2 : MooreRegime::TwoR1;
}

/// Formal wedge of Moore spaces P^d(p^r), encoded as dimension -> multiplicity.
struct MooreWedge {
    int p = 3;
    int r = 1;
    MooreRegime regime = MooreRegime::OddP;
    std::map<int, Integer> coefficients;

    static MooreWedge zero(int p, int r) { return MooreWedge{p, r, moore_regime(p, r), {}}; }

    static MooreWedge single(int dim, int p, int r, Integer mult = 1) {
        MooreWedge w = zero(p, r);
        w.add(dim, std::move(mult));
        return w;
    }

    void add(int dim, Integer mult) {
        require(dim >= 2, "MooreWedge: dimensions start at 2");
        require(mult >= 1, "MooreWedge: multiplicities are positive");
        coefficients[dim] += mult;
    }

    /// Total reduced mod-p homology dimension: each P^d contributes 2.
    Integer homology_dim() const {
        Integer total = 0;
        for (const auto& [d, m] : coefficients)
            total += 2 * m;
        return total;
    }

    bool operator==(const MooreWedge& o) const {
        return p == o.p && r == o.r && coefficients == o.coefficients;
    }
};

/// Bilinear extension of P^n ^ P^m = P^(n+m) v P^(n+m-1). Commutative and
/// associative. Refused in the p = 2, r = 1 regime.
inline MooreWedge smash(const MooreWedge& a, const MooreWedge& b) {
    require(a.p == b.p && a.r == b.r, "smash: mixed coefficients");
    require(a.regime != MooreRegime::TwoR1,
            "smash: no wedge rule for mod-2 Moore spaces with r = 1; "
            "use the recorded cube decomposition instead");
    MooreWedge out = MooreWedge::zero(a.p, a.r);
    for (const auto& [d1, m1] : a.coefficients)
        for (const auto& [d2, m2] : b.coefficients) {
            out.add(d1 + d2, m1 * m2);
            out.add(d1 + d2 - 1, m1 * m2);
        }
    return out;
}

namespace detail {

// Dimension polynomial product: x^n stands for P^n, and one smash factor
// P^n contributes (x^n + x^(n-1)) after the first.
inline std::map<int, Integer> poly_mul(const std::map<int, Integer>& a,
                                       const std::map<int, Integer>& b) {
    std::map<int, Integer> out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b)
            out[da + db] += ca * cb;
    return out;
}

}  // namespace detail

/// k-fold smash power of P^n(p^r) by iterated pairwise smash, cross-checked
/// against the polynomial expansion x^n (x^n + x^(n-1))^(k-1).
inline MooreWedge smash_power(int n, int k, int p, int r) {
    require(k >= 1, "smash_power: need k >= 1");
    require(k <= 400, "smash_power: k above desk scale");
    MooreWedge acc = MooreWedge::single(n, p, r);
    if (k > 1) {
        require(acc.regime != MooreRegime::TwoR1,
                "smash_power: no wedge rule for mod-2 Moore spaces with r = 1");
        const MooreWedge base = MooreWedge::single(n, p, r);
        for (int t = 1; t < k; ++t)
            acc = smash(acc, base);
    }

    std::map<int, Integer> poly{{n, 1}};
    const std::map<int, Integer> factor{{n, 1}, {n - 1, 1}};
    for (int t = 1; t < k; ++t)
        poly = detail::poly_mul(poly, factor);
    require(poly == acc.coefficients, "smash_power: iterated rule disagrees with polynomial expansion");
    return acc;
}

/// The recorded decomposition of the triple smash of the real projective
/// plane: one opaque summand (RP^2 ^ CP^2) plus two copies of P^5(2). Stored
/// data, not computed; the opaque summand is never expanded.
struct CubeDecomposition {
    std::string exotic_label = "RP^2 ^ CP^2";
    Integer exotic_homology_dim = 4;  // reduced F_2 homology of RP^2 ^ CP^2
    int moore_dim = 5;
    Integer moore_count = 2;

    Integer homology_dim() const { return exotic_homology_dim + 2 * moore_count; }
};

inline CubeDecomposition mod2_cube() { return {}; }

struct EmbeddingCount {
    int dimension = 2;   // 3s + 2
    Integer count = 1;   // 2^s
};

/// Moore summands of the (2s+1)-fold smash of RP^2: a wedge of 2^s copies of
/// P^(3s+2)(2). Derived by the recurrence seeded at RP^2 = P^2(2): each step
/// smashes the summand with RP^2 ^ RP^2 and applies the cube record, raising
/// the dimension by moore_dim - 2 and multiplying the count by moore_count.
inline EmbeddingCount mod2_embedding_count(long s) {
    require(s >= 0, "mod2_embedding_count: need s >= 0");
    require(s <= 4000, "mod2_embedding_count: s above desk scale");
    const CubeDecomposition cube = mod2_cube();
    EmbeddingCount e;  // s = 0: RP^2 itself
    for (long t = 0; t < s; ++t) {
        e.dimension += cube.moore_dim - 2;
        e.count *= cube.moore_count;
    }
    require(e.dimension == 3 * s + 2, "mod2_embedding_count: recurrence broke the closed form");
    require(e.count == ipow(2, static_cast<unsigned long>(s)),
            "mod2_embedding_count: recurrence broke the closed form");
    return e;
}

/// One weight-w factor of the two-summand wedge splitting: the suspension
/// normalization of (P^dim1)^(^a1) ^ (P^dim2)^(^a2).
struct HiltonMilnorFactor {
    long a1 = 0;
    long a2 = 0;
    long suspension_degree = 0;  // (dim2 - dim1) * a2
    int smash_base_dim = 0;      // dim1
    long weight = 0;             // w = a1 + a2
    Integer multiplicity;        // Lyndon multidegree count
};

/// Weight-w factors of the free Lie bookkeeping for the wedge
/// P^dim1 v P^dim2, one per two-letter multidegree (a1, a2) with nonzero
/// Lyndon count. Total multiplicity over all factors is witt_dim(2, w).
inline std::vector<HiltonMilnorFactor> hilton_milnor_factors(int dim1, int dim2, long w) {
    require(dim1 >= 2 && dim1 <= dim2, "hilton_milnor_factors: need 2 <= dim1 <= dim2");
    require(w >= 1, "hilton_milnor_factors: need weight >= 1");
    std::vector<HiltonMilnorFactor> out;
    Integer total = 0;
    for (long a1 = w; a1 >= 0; --a1) {
        const long a2 = w - a1;
        Integer mult = multidegree_count(a1, a2);
        if (mult == 0)
            continue;
        total += mult;
        out.push_back({a1, a2, (dim2 - dim1) * a2, dim1, w, std::move(mult)});
    }
    require(total == witt_dim(2, w), "hilton_milnor_factors: multiplicities do not sum to the Witt dimension");
    return out;
}

}  // namespace tgl
