#pragma once

// The mod-2 lambda algebra: admissible monomial basis, the Adem-type
// straightening rewrite, the differential, the sub-complexes Lambda(n), and
// desk-scale homology over F_2.
//
// Generators lambda_i of degree i, i >= 0; a monomial lambda_I with
// I = (i1, ..., is) is admissible iff 2 i_j >= i_{j+1} for every adjacent
// pair (the empty monomial is the unit). Inadmissible adjacent pairs
// lambda_i lambda_{2i+1+k} rewrite to sum_{j>=0} C(k-1-j, j) (mod 2)
// lambda_{i+k-j} lambda_{2i+1+j}. The differential is
// d(lambda_i) = sum_{j>=1} C(i-j, j) lambda_{i-j} lambda_{j-1}, extended by
// the signless Leibniz rule and straightened.
//
// Binomials use the convention C(a, b) = 0 for a < 0, b < 0 or b > a and
// C(a, 0) = 1 for a >= 0; it makes every relation finite, forces
// lambda_i lambda_{2i+1} = 0, and is validated behaviorally by the d*d = 0
// and straighten/differential compatibility suites.
//
// Each rewrite strictly decreases the left index vector in a well-founded
// order, so straightening terminates; the step budget below is a defect
// detector, not a tunable.

#include <map>
#include <set>
#include <vector>

#include "tgl/common.hpp"
#include "tgl/field_linalg.hpp"

namespace tgl {
namespace lambda {

using Mono = std::vector<int>;  // index sequence (i1, ..., is), entries >= 0

/// F_2 linear combination: a monomial is present iff its coefficient is 1.
struct Element {
    std::set<Mono> terms;

    bool is_zero() const { return terms.empty(); }

    void toggle(const Mono& m) {
        auto it = terms.find(m);
        if (it == terms.end())
            terms.insert(m);
        else
            terms.erase(it);
    }

    Element& operator+=(const Element& o) {
        for (const auto& m : o.terms)
            toggle(m);
        return *this;
    }

    bool operator==(const Element& o) const { return terms == o.terms; }
};

inline Element operator+(Element a, const Element& b) {
    a += b;
    return a;
}

inline long degree(const Mono& m) {
    long d = 0;
    for (int i : m)
        d += i;
    return d;
}

inline bool is_admissible(const Mono& m) {
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
        if (2 * m[j] < m[j + 1])
            return false;
    return true;
}

inline bool binom_mod2(long a, long b) {
    if (a < 0 || b < 0 || b > a)
        return false;
    return (b & (a - b)) == 0;  // Lucas at p = 2
}

namespace detail {

// Straightened form of the single inadmissible pair (i, 2i+1+k). Every term
// the relation produces is already admissible as a pair.
inline const std::vector<std::pair<int, int>>& straighten_pair(int i, int b) {
    thread_local std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> memo;
    auto key = std::make_pair(i, b);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    const int k = b - 2 * i - 1;
    std::vector<std::pair<int, int>> out;
    for (int j = 0; k - 1 - j >= j; ++j)
        if (binom_mod2(k - 1 - j, j))
            out.emplace_back(i + k - j, 2 * i + 1 + j);
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace detail

/// Class of lambda_I in the admissible basis: repeatedly rewrites the
/// leftmost inadmissible adjacent pair, summing mod 2.
inline Element straighten(const Mono& input) {
    constexpr long kStepBudget = 1000000;
    Element result;
    std::vector<Mono> pending{input};
    long steps = 0;
    while (!pending.empty()) {
        require(++steps <= kStepBudget, "straighten: step budget exceeded (rewrite defect)");
        Mono m = std::move(pending.back());
        pending.pop_back();
        std::size_t bad = m.size();
        for (std::size_t j = 0; j + 1 < m.size(); ++j)
            if (2 * m[j] < m[j + 1]) {
                bad = j;
                break;
            }
        if (bad == m.size()) {
            result.toggle(m);
            continue;
        }
        for (const auto& [a, b] : detail::straighten_pair(m[bad], m[bad + 1])) {
            Mono next = m;
            next[bad] = a;
            next[bad + 1] = b;
            pending.push_back(std::move(next));
        }
    }
    return result;
}

inline Element straighten(const Element& e) {
    Element out;
    for (const auto& m : e.terms)
        out += straighten(m);
    return out;
}

/// Concatenate-and-straighten product. Associative; the empty monomial is
/// the unit.
inline Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& ma : a.terms)
        for (const auto& mb : b.terms) {
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out += straighten(m);
        }
    return out;
}

/// d(lambda_i) as raw (unstraightened) index pairs.
inline std::vector<std::pair<int, int>> differential_of_generator(int i) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; i - j >= j; ++j)
        if (binom_mod2(i - j, j))
            out.emplace_back(i - j, j - 1);
    return out;
}

/// Signless Leibniz extension of d, straightened. Satisfies d(d(x)) = 0.
inline Element differential(const Element& e) {
    Element out;
    for (const auto& m : e.terms)
        for (std::size_t t = 0; t < m.size(); ++t)
            for (const auto& [a, b] : differential_of_generator(m[t])) {
                Mono next;
                next.reserve(m.size() + 1);
                next.insert(next.end(), m.begin(), m.begin() + t);
                next.push_back(a);
                next.push_back(b);
                next.insert(next.end(), m.begin() + t + 1, m.end());
                out += straighten(next);
            }
    return out;
}

inline Element differential(const Mono& m) {
    Element e;
    e.terms.insert(m);
    return differential(e);
}

/// All admissible monomials of the given length and degree, lexicographically
/// ordered. Guarded at desk scale.
inline std::vector<Mono> basis(int length, long deg) {
    require(length >= 0 && deg >= 0, "lambda basis: negative bidegree");
    require(deg <= max_degree_cap(), "lambda basis: degree above desk-scale cap");
    require(length <= max_degree_cap() + 4, "lambda basis: length above desk-scale cap");
    std::vector<Mono> out;
    if (length == 0) {
        if (deg == 0)
            out.push_back({});
        return out;
    }
    Mono cur;
    // DFS in lexicographic order; prune with the max future sum
    // 2v(2^r - 1) reachable from last value v with r letters left.
    auto max_tail = [](long v, int r) -> long {
        long total = 0, cap = 2 * v;
        for (int t = 0; t < r; ++t) {
            total += cap;
            cap *= 2;
            if (total > 1000000)
                return total;  // saturate
        }
        return total;
    };
    auto rec = [&](auto&& self, long remaining, int left) -> void {
        if (left == 0) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            if (!cur.empty() && v > 2 * cur.back())
                break;
            if (remaining - v > max_tail(v, left - 1))
                continue;
            cur.push_back(static_cast<int>(v));
            self(self, remaining - v, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, deg, length);
    return out;
}

/// Lambda(n): admissible monomials whose initial index is < n. Closed under
/// the differential.
inline std::vector<Mono> lambda_n_basis(int n, int length, long deg) {
    require(n >= 1, "lambda_n_basis: need n >= 1");
    std::vector<Mono> out;
    for (auto& m : basis(length, deg))
        if (m.empty() || m.front() < n)
            out.push_back(std::move(m));
    return out;
}

/// Homology table of Lambda(n) over F_2 in bidegrees (length s, degree t):
/// dim ker d - dim im d, with d of bidegree (s+1, t-1).
/// Rows: s in [0, max_length], t in [0, max_degree].
inline std::map<std::pair<int, long>, std::size_t> homology_dims(int n, long max_degree,
                                                                 int max_length = -1) {
    require(max_degree <= max_degree_cap(), "homology_dims: degree above desk-scale cap");
    if (max_length < 0)
        max_length = static_cast<int>(max_degree);

    auto chain = [&](int s, long t) {
        return (s < 0 || t < 0) ? std::vector<Mono>{} : lambda_n_basis(n, s, t);
    };

    // Matrix of d: (s, t) -> (s+1, t-1) in the given bases.
    auto d_matrix = [&](const std::vector<Mono>& dom, const std::vector<Mono>& cod) {
        std::map<Mono, std::size_t> row_of;
        for (std::size_t r = 0; r < cod.size(); ++r)
            row_of[cod[r]] = r;
        PrimeFieldMatrix m(2, cod.size(), dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c)
            for (const auto& term : differential(dom[c]).terms) {
                auto it = row_of.find(term);
                require(it != row_of.end(), "homology_dims: differential leaves Lambda(n)");
                m.set(it->second, c, 1);
            }
        return m;
    };

    std::map<std::pair<int, long>, std::size_t> h;
    for (int s = 0; s <= max_length; ++s)
        for (long t = 0; t <= max_degree; ++t) {
            auto here = chain(s, t);
            if (here.empty())
                continue;
            auto out_rank = rank(d_matrix(here, chain(s + 1, t - 1)));
            auto in_rank = rank(d_matrix(chain(s - 1, t + 1), here));
            h[{s, t}] = here.size() - out_rank - in_rank;
        }
    return h;
}

struct TildeCount {
    Integer count;  // admissible monomials of degree <= q ending in some lambda_i, i > 0
    Integer bound;  // C(2q, q-1)
};

/// Exact dimension of the positive-ending sub-basis through degree q, with
/// the binomial bound it stays under. Ending with lambda_i (i > 0) forces
/// every index positive, since a zero index only admits zeros after it.
inline TildeCount tilde_dim_upto(long q) {
    require(q >= 0 && q <= 40, "tilde_dim_upto: q out of range [0, 40]");
    Integer count = 0;
    // DFS over all-positive admissible sequences with degree <= q.
    auto rec = [&](auto&& self, int last, long used) -> void {
        for (int v = 1; used + v <= q; ++v) {
            if (last > 0 && v > 2 * last)
                break;
            ++count;
            self(self, v, used + v);
        }
    };
    rec(rec, 0, 0);
    TildeCount r{count, binomial(2 * q, q - 1)};
    require(r.count <= r.bound, "tilde_dim_upto: count exceeds binomial bound");
    return r;
}

}  // namespace lambda
}  // namespace tgl
