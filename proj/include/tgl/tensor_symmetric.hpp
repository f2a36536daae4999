#pragma once

// Tensor powers of graded F_p spaces with the (optionally signed) symmetric
// group action: symmetrizers, Dynkin-Specht-Wever elements, operator
// matrices, and the relation kernel among the l(l+1) symmetrized insertion
// vectors that bounds wedge multiplicities.
//
// Conventions, fixed once for the whole module:
//   * S_k acts on the right by permuting positions: (w . sigma)[i] = w[sigma(i)],
//     so (w . sigma) . tau = w . (sigma tau) with (sigma tau)(i) = sigma(tau(i)).
//   * The group algebra multiplies in action order: v . (d1 d2) = (v . d1) . d2.
//   * Koszul mode inserts (-1)^(|a||b|) per transposed pair of generators;
//     unsigned mode ignores degrees. Mixed-parity spaces are only supported
//     in unsigned mode.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tgl/common.hpp"
#include "tgl/field_linalg.hpp"

namespace tgl {

using Word = std::vector<int>;   // generator indices
using Perm = std::vector<int>;   // perm[i] = sigma(i), 0-based positions

enum class SignMode { Unsigned, Koszul };
enum class Parity { AllEven, AllOdd, Mixed };

inline Perm identity_perm(int k) {
    Perm p(k);
    for (int i = 0; i < k; ++i)
        p[i] = i;
    return p;
}

/// Product in action order: v . perm_product(a, b) == (v . a) . b.
inline Perm perm_product(const Perm& a, const Perm& b) {
    require(a.size() == b.size(), "perm_product: length mismatch");
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

inline int perm_sign(const Perm& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                sign = -sign;
    return sign;
}

/// Graded F_p vector space with named generators.
class GradedSpace {
public:
    GradedSpace(int p, std::vector<std::pair<std::string, int>> generators)
        : field_(p), generators_(std::move(generators)) {
        require(!generators_.empty(), "GradedSpace: need at least one generator");
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            require(generators_[i].second >= 1, "GradedSpace: degrees must be >= 1");
            for (std::size_t j = i + 1; j < generators_.size(); ++j)
                require(generators_[i].first != generators_[j].first,
                        "GradedSpace: generator names must be distinct");
        }
    }

    /// m generators of a common degree, named x1..xm.
    static GradedSpace uniform(int p, int m, int degree) {
        std::vector<std::pair<std::string, int>> gens;
        for (int i = 1; i <= m; ++i)
            gens.emplace_back("x" + std::to_string(i), degree);
        return GradedSpace(p, std::move(gens));
    }

    int p() const { return field_.p(); }
    int dim() const { return static_cast<int>(generators_.size()); }
    int degree(int i) const { return generators_[i].second; }
    const std::string& name(int i) const { return generators_[i].first; }

    Parity parity() const {
        bool any_even = false, any_odd = false;
        for (const auto& g : generators_)
            (g.second % 2 == 0 ? any_even : any_odd) = true;
        if (any_even && any_odd)
            return Parity::Mixed;
        return any_even ? Parity::AllEven : Parity::AllOdd;
    }

private:
    PrimeField field_;
    std::vector<std::pair<std::string, int>> generators_;
};

/// F_p-linear combination of equal-length words in a graded space. The space
/// is captured by value (dimension and degrees only), keeping elements pure
/// values.
struct TensorElement {
    int p = 2;
    int length = 0;
    std::vector<int> gen_degrees;
    std::map<Word, int> terms;  // coefficients in [1, p); zeros never stored

    static TensorElement zero(const GradedSpace& space, int length) {
        TensorElement e;
        e.p = space.p();
        e.length = length;
        e.gen_degrees.resize(space.dim());
        for (int i = 0; i < space.dim(); ++i)
            e.gen_degrees[i] = space.degree(i);
        return e;
    }

    static TensorElement single(const GradedSpace& space, Word w, int coeff = 1) {
        TensorElement e = zero(space, static_cast<int>(w.size()));
        for (int g : w)
            require(g >= 0 && g < space.dim(), "TensorElement: letter outside the space");
        e.add_term(std::move(w), coeff);
        return e;
    }

    void add_term(Word w, long long coeff) {
        int c = static_cast<int>(((coeff % p) + p) % p);
        if (c == 0)
            return;
        auto [it, inserted] = terms.emplace(std::move(w), c);
        if (!inserted) {
            it->second = (it->second + c) % p;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const TensorElement& o) const {
        return p == o.p && length == o.length && terms == o.terms;
    }
};

/// Element of the group algebra of S_k. Coefficients are kept as integers
/// and reduced mod p when the element acts; rational scalars such as 1/k are
/// realized as modular inverses at scale time.
struct GroupAlgebraElement {
    int k = 1;
    std::map<Perm, long long> terms;

    static GroupAlgebraElement zero(int k) { return GroupAlgebraElement{k, {}}; }

    static GroupAlgebraElement unit(int k) {
        GroupAlgebraElement e{k, {}};
        e.terms[identity_perm(k)] = 1;
        return e;
    }

    static GroupAlgebraElement of(Perm sigma, long long coeff = 1) {
        GroupAlgebraElement e{static_cast<int>(sigma.size()), {}};
        e.add(std::move(sigma), coeff);
        return e;
    }

    void add(Perm sigma, long long coeff) {
        auto [it, inserted] = terms.emplace(std::move(sigma), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    std::size_t term_count() const { return terms.size(); }
};

inline GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require(a.k == b.k, "group algebra sum: arity mismatch");
    GroupAlgebraElement r = a;
    for (const auto& [sigma, c] : b.terms)
        r.add(sigma, c);
    return r;
}

inline GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require(a.k == b.k, "group algebra difference: arity mismatch");
    GroupAlgebraElement r = a;
    for (const auto& [sigma, c] : b.terms)
        r.add(sigma, -c);
    return r;
}

inline GroupAlgebraElement operator*(long long c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r = GroupAlgebraElement::zero(a.k);
    if (c != 0)
        for (const auto& [sigma, coeff] : a.terms)
            r.add(sigma, c * coeff);
    return r;
}

/// Product in action order: act(a * b) applies a first, then b.
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require(a.k == b.k, "group algebra product: arity mismatch");
    GroupAlgebraElement r = GroupAlgebraElement::zero(a.k);
    for (const auto& [sigma, ca] : a.terms)
        for (const auto& [tau, cb] : b.terms)
            r.add(perm_product(sigma, tau), ca * cb);
    return r;
}

/// 1/k scaling by the modular inverse; requires gcd(p, k) = 1.
inline GroupAlgebraElement scaled_by_inverse(const GroupAlgebraElement& a, long k, int p) {
    require(k % p != 0, "scaled_by_inverse: k not invertible mod p");
    PrimeField f(p);
    const int inv = f.inv(f.reduce(k));
    GroupAlgebraElement r = GroupAlgebraElement::zero(a.k);
    for (const auto& [sigma, c] : a.terms) {
        int v = f.mul(f.reduce(c), inv);
        if (v != 0)
            r.add(sigma, v);
    }
    return r;
}

/// Permute the letters of w by sigma acting on positions. Returns the new
/// word and the sign: +1 in unsigned mode, the Koszul sign (product of
/// (-1)^(|a||b|) over transposed pairs) in koszul mode.
inline std::pair<Word, int> apply_permutation(const Word& w, const Perm& sigma, SignMode mode,
                                              const std::vector<int>& gen_degrees) {
    require(w.size() == sigma.size(), "apply_permutation: length mismatch");
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = w[sigma[i]];
    int sign = 1;
    if (mode == SignMode::Koszul) {
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j] && gen_degrees[w[sigma[i]]] % 2 && gen_degrees[w[sigma[j]]] % 2)
                    sign = -sign;
    }
    return {std::move(out), sign};
}

/// Sum over S_k of sgn(sigma)*sigma (signed) or sigma (unsigned).
inline GroupAlgebraElement symmetrizer(int k, bool signed_coeffs) {
    require(k >= 1 && k <= 8, "symmetrizer: k out of range [1, 8]");
    GroupAlgebraElement e = GroupAlgebraElement::zero(k);
    Perm sigma = identity_perm(k);
    do {
        e.add(sigma, signed_coeffs ? perm_sign(sigma) : 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return e;
}

/// Dynkin-Specht-Wever element: beta_2 = 1 - (1,2) and
/// beta_k = (1 (x) beta_{k-1}) * (1 - (1,2,...,k)). Acting on x1 (x) ... (x) xk
/// it produces the nested commutator [x1, [x2, ..., [x_{k-1}, xk]...]], and it
/// satisfies beta_k * beta_k = k beta_k in the group algebra.
inline GroupAlgebraElement dsw(int k) {
    require(k >= 2, "dsw: need k >= 2");
    require(k <= 8, "dsw: k out of range [2, 8]");
    // beta_2 on positions {0, 1}
    GroupAlgebraElement beta = GroupAlgebraElement::unit(2) - GroupAlgebraElement::of(Perm{1, 0});
    for (int j = 3; j <= k; ++j) {
        // shift beta_{j-1} to act on positions 1..j-1
        GroupAlgebraElement shifted = GroupAlgebraElement::zero(j);
        for (const auto& [sigma, c] : beta.terms) {
            Perm s(j);
            s[0] = 0;
            for (int i = 0; i < j - 1; ++i)
                s[i + 1] = sigma[i] + 1;
            shifted.add(std::move(s), c);
        }
        Perm cycle(j);  // (1,2,...,j): position i picks up letter i+1
        for (int i = 0; i < j - 1; ++i)
            cycle[i] = i + 1;
        cycle[j - 1] = 0;
        beta = shifted * (GroupAlgebraElement::unit(j) - GroupAlgebraElement::of(std::move(cycle)));
    }
    return beta;
}

/// Linear extension of apply_permutation over both arguments.
inline TensorElement act(const GroupAlgebraElement& delta, const TensorElement& v, SignMode mode) {
    require(delta.k == v.length, "act: arity mismatch");
    if (mode == SignMode::Koszul) {
        bool any_even = false, any_odd = false;
        for (int d : v.gen_degrees)
            (d % 2 == 0 ? any_even : any_odd) = true;
        require(!(any_even && any_odd), "act: koszul mode requires a pure-parity space");
    }
    TensorElement out;
    out.p = v.p;
    out.length = v.length;
    out.gen_degrees = v.gen_degrees;
    for (const auto& [sigma, dc] : delta.terms)
        for (const auto& [w, c] : v.terms) {
            auto [w2, sign] = apply_permutation(w, sigma, mode, v.gen_degrees);
            out.add_term(std::move(w2), dc * sign * c);
        }
    return out;
}

namespace detail {

inline std::size_t word_index(const Word& w, int dim) {
    std::size_t idx = 0;
    for (int g : w)
        idx = idx * dim + static_cast<std::size_t>(g);
    return idx;
}

inline Word index_word(std::size_t idx, int dim, int k) {
    Word w(k);
    for (int i = k - 1; i >= 0; --i) {
        w[i] = static_cast<int>(idx % dim);
        idx /= dim;
    }
    return w;
}

}  // namespace detail

/// Matrix of v |-> v . delta on the word basis of V^(x k), basis ordered
/// lexicographically by generator index. Column j holds the image of the
/// j-th basis word.
inline PrimeFieldMatrix operator_matrix(const GroupAlgebraElement& delta, const GradedSpace& space,
                                        int k, SignMode mode) {
    require(k == delta.k, "operator_matrix: arity mismatch");
    double size = 1;
    for (int i = 0; i < k; ++i)
        size *= space.dim();
    require(size <= 1e5, "operator_matrix: word basis exceeds desk scale (1e5 columns)");
    const std::size_t n = static_cast<std::size_t>(size);

    PrimeFieldMatrix m(space.p(), n, n);
    for (std::size_t col = 0; col < n; ++col) {
        Word w = detail::index_word(col, space.dim(), k);
        TensorElement img = act(delta, TensorElement::single(space, w), mode);
        for (const auto& [w2, c] : img.terms)
            m.set(detail::word_index(w2, space.dim()), col, c);
    }
    return m;
}

/// Report on the relation kernel among the l(l+1) vectors
/// (s_l(x1 (x) ... (x) xl) (x) xi) . sigma_j in V^(x (l+1)), where sigma_j
/// inserts the last letter at position j and s_l is the signed symmetrizer on
/// an all-even space or the unsigned one on an all-odd space.
struct Lemma51Report {
    int l = 0;
    int p = 0;
    Parity parity = Parity::AllEven;
    std::size_t kernel_dimension = 0;                // = l when the relation holds
    std::vector<std::vector<int>> relation_basis;    // c_{i,j} vectors, i-major, j-minor
    std::vector<int> expected_sign_profile;          // sign_j with c_{i,j} = sign_j * t_i
    bool pattern_ok = false;
    std::size_t dropped_kernel_dimension = 0;        // families j <= l only; = 0
    std::size_t distinct_monomials = 0;              // = l (l+1)! / 2
    bool each_monomial_twice = false;
    bool pass = false;
};

/// The insertion cycle sigma_j (1-based j in [1, l+1]): fixes positions < j,
/// puts the last letter at position j, shifts the rest down by one.
inline Perm insertion_cycle(int l, int j) {
    require(j >= 1 && j <= l + 1, "insertion_cycle: j out of range");
    Perm sigma(l + 1);
    for (int t = 0; t < j - 1; ++t)
        sigma[t] = t;
    sigma[j - 1] = l;
    for (int t = j; t <= l; ++t)
        sigma[t] = t - 1;
    return sigma;
}

inline Lemma51Report lemma51_relations(int l, int p, Parity parity = Parity::AllEven) {
    require(is_prime(p), "lemma51_relations: p must be prime");
    require(1 < l && l < p - 1, "lemma51_relations: need 1 < l < p - 1");
    require(parity != Parity::Mixed, "lemma51_relations: parity must be pure");

    const bool even = parity == Parity::AllEven;
    GradedSpace space = GradedSpace::uniform(p, l, even ? 2 : 1);
    const GroupAlgebraElement s_l = symmetrizer(l, /*signed_coeffs=*/even);

    Word base_word(l);
    for (int i = 0; i < l; ++i)
        base_word[i] = i;
    const TensorElement symmetrized = act(s_l, TensorElement::single(space, base_word), SignMode::Koszul);

    // v_{i,j}: append letter i, then act by the insertion cycle sigma_j.
    std::vector<TensorElement> vectors;  // column order: i-major, j-minor
    std::map<Word, int> occurrences;
    for (int i = 0; i < l; ++i) {
        TensorElement appended = TensorElement::zero(space, l + 1);
        for (const auto& [w, c] : symmetrized.terms) {
            Word w2 = w;
            w2.push_back(i);
            appended.add_term(std::move(w2), c);
        }
        for (int j = 1; j <= l + 1; ++j) {
            TensorElement v = act(GroupAlgebraElement::of(insertion_cycle(l, j)), appended, SignMode::Koszul);
            for (const auto& [w, c] : v.terms)
                ++occurrences[w];
            vectors.push_back(std::move(v));
        }
    }

    const int dim = space.dim();
    std::size_t ambient = 1;
    for (int i = 0; i <= l; ++i)
        ambient *= static_cast<std::size_t>(dim);

    auto span_matrix = [&](bool drop_last_family) {
        const int cols_per_i = drop_last_family ? l : l + 1;
        PrimeFieldMatrix m(p, ambient, static_cast<std::size_t>(l) * cols_per_i);
        for (int i = 0; i < l; ++i)
            for (int jj = 0; jj < cols_per_i; ++jj) {
                const auto& v = vectors[static_cast<std::size_t>(i) * (l + 1) + jj];
                for (const auto& [w, c] : v.terms)
                    m.set(detail::word_index(w, dim), static_cast<std::size_t>(i) * cols_per_i + jj, c);
            }
        return m;
    };

    Lemma51Report rep;
    rep.l = l;
    rep.p = p;
    rep.parity = parity;
    rep.relation_basis = kernel_basis(span_matrix(false));
    rep.kernel_dimension = rep.relation_basis.size();
    rep.dropped_kernel_dimension = kernel_basis(span_matrix(true)).size();

    // Expected coefficient pattern: alternating c_{i,j} = (-1)^(j-1) t_i on an
    // all-even space; on an all-odd space the Koszul sign of sigma_j is
    // (-1)^(l+1-j), which cancels the alternation and leaves c_{i,j} = t_i.
    rep.expected_sign_profile.resize(l + 1);
    for (int jj = 0; jj <= l; ++jj)
        rep.expected_sign_profile[jj] = even ? (jj % 2 == 0 ? 1 : -1) : 1;

    PrimeField f(p);
    rep.pattern_ok = true;
    for (const auto& c : rep.relation_basis)
        for (int i = 0; i < l && rep.pattern_ok; ++i) {
            const int t = c[static_cast<std::size_t>(i) * (l + 1)];
            for (int jj = 0; jj <= l; ++jj) {
                const int expected = rep.expected_sign_profile[jj] == 1 ? t : f.neg(t);
                if (c[static_cast<std::size_t>(i) * (l + 1) + jj] != expected) {
                    rep.pattern_ok = false;
                    break;
                }
            }
        }

    rep.distinct_monomials = occurrences.size();
    rep.each_monomial_twice = true;
    for (const auto& [w, n] : occurrences)
        if (n != 2) {
            rep.each_monomial_twice = false;
            break;
        }

    Integer factorial = 1;  // (l+1)!
    for (int t = 2; t <= l + 1; ++t)
        factorial *= t;
    const Integer expected_distinct = Integer(l) * factorial / 2;

    rep.pass = rep.kernel_dimension == static_cast<std::size_t>(l) && rep.pattern_ok &&
               rep.dropped_kernel_dimension == 0 &&
               Integer(rep.distinct_monomials) == expected_distinct && rep.each_monomial_twice;
    return rep;
}

}  // namespace tgl
