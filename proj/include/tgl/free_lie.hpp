#pragma once

// Witt/necklace dimension counts for free (restricted) Lie algebras, Lyndon
// word enumeration as the independent oracle, and the two-letter multidegree
// counts that drive Hilton-Milnor bookkeeping.

#include <string>
#include <unordered_map>
#include <vector>

#include "tgl/common.hpp"

namespace tgl {

inline std::vector<long> divisors(long n) {
    require(n >= 1, "divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(long n) {
    require(n >= 1, "mobius: n must be positive");
    thread_local std::unordered_map<long, int> memo;
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    long m = n;
    int mu = 1;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d)
            continue;
        m /= d;
        if (m % d == 0) {
            mu = 0;
            break;
        }
        mu = -mu;
    }
    if (mu != 0 && m > 1)
        mu = -mu;
    memo.emplace(n, mu);
    return mu;
}

/// Weight-n dimension of the free Lie algebra on m generators:
/// (1/n) sum_{d|n} mu(d) m^(n/d). Equals the number of length-n Lyndon words.
inline Integer witt_dim(long m, long n) {
    require(m >= 1 && n >= 1, "witt_dim: m, n must be positive");
    Integer sum = 0;
    for (long d : divisors(n))
        sum += mobius(d) * ipow(m, static_cast<unsigned long>(n / d));
    require(sum % n == 0, "witt_dim: necklace sum not divisible by n");
    return sum / n;
}

namespace detail {

// Duval/FKM iteration over Lyndon words of length <= n on m letters, in
// lexicographic order. visit(word) is called once per word.
template <typename Visit>
void for_each_lyndon(long m, long n, Visit&& visit) {
    require(m >= 1 && n >= 1, "lyndon enumeration: m, n must be positive");
    std::vector<int> w{0};
    while (true) {
        visit(const_cast<const std::vector<int>&>(w));
        const std::size_t k = w.size();
        while (w.size() < static_cast<std::size_t>(n))
            w.push_back(w[w.size() % k]);
        while (!w.empty() && w.back() == m - 1)
            w.pop_back();
        if (w.empty())
            return;
        ++w.back();
    }
}

}  // namespace detail

/// All length-n Lyndon words over the alphabet {a, b, c, ...} (m letters),
/// lexicographically sorted.
inline std::vector<std::string> lyndon_words(long m, long n) {
    require(m <= 26, "lyndon_words: alphabet capped at 26 letters");
    std::vector<std::string> out;
    detail::for_each_lyndon(m, n, [&](const std::vector<int>& w) {
        if (w.size() != static_cast<std::size_t>(n))
            return;
        std::string s;
        s.reserve(w.size());
        for (int c : w)
            s.push_back(static_cast<char>('a' + c));
        out.push_back(std::move(s));
    });
    return out;
}

/// |lyndon_words(m, n)| by enumeration, without materializing the list.
inline Integer lyndon_count(long m, long n) {
    Integer count = 0;
    detail::for_each_lyndon(m, n, [&](const std::vector<int>& w) {
        if (w.size() == static_cast<std::size_t>(n))
            ++count;
    });
    return count;
}

/// Generator count of the free restricted Lie algebra in weight n:
/// sum of witt_dim(m, u) over the factorizations n = p^j * u, j >= 0.
inline Integer restricted_witt_dim(long m, long n, long p) {
    require(m >= 1 && n >= 1, "restricted_witt_dim: m, n must be positive");
    require(is_prime(p), "restricted_witt_dim: p must be prime");
    Integer sum = 0;
    for (long u = n; ; u /= p) {
        sum += witt_dim(m, u);
        if (u % p != 0)
            break;
    }
    return sum;
}

/// Number of two-letter Lyndon words containing the first letter a1 times and
/// the second a2 times: (1/w) sum_{d | gcd(a1,a2)} mu(d) C(w/d, a1/d).
inline Integer multidegree_count(long a1, long a2) {
    require(a1 >= 0 && a2 >= 0 && a1 + a2 >= 1, "multidegree_count: need a1 + a2 >= 1");
    const long w = a1 + a2;
    const long g = std::gcd(a1, a2);
    Integer sum = 0;
    for (long d : divisors(g))
        sum += mobius(d) * binomial(w / d, a1 / d);
    require(sum % w == 0, "multidegree_count: sum not divisible by weight");
    return sum / w;
}

struct TensorDimBound {
    Integer count;          // sum_{j<=l} m^j, exact
    bool has_witness;       // geometric witness exists only for m >= 2
    Rational c1;            // witness constant m/(m-1); count <= c1 * m^l
};

/// Total dimension of the tensor algebra on m generators through length l,
/// with the geometric bound witness C1 = m/(m-1) for m >= 2.
inline TensorDimBound tensor_dim_upto(long m, long l) {
    require(m >= 1 && l >= 0, "tensor_dim_upto: need m >= 1, l >= 0");
    TensorDimBound r;
    r.count = 0;
    for (long j = 0; j <= l; ++j)
        r.count += ipow(m, static_cast<unsigned long>(j));
    r.has_witness = m >= 2;
    r.c1 = r.has_witness ? Rational(m, m - 1) : Rational(0);
    if (r.has_witness)
        require(Rational(r.count) <= r.c1 * Rational(ipow(m, static_cast<unsigned long>(l))),
                "tensor_dim_upto: geometric bound violated");
    return r;
}

}  // namespace tgl
