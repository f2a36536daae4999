#pragma once

// The acceptance suite: every criterion the artifact certifies, each with
// its stated time budget, runnable from the CLI (verify-all) and from the
// dedicated acceptance binary.

#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tgl/field_linalg.hpp"
#include "tgl/free_lie.hpp"
#include "tgl/growth.hpp"
#include "tgl/lambda.hpp"
#include "tgl/moore.hpp"
#include "tgl/tensor_symmetric.hpp"

namespace tgl::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::string detail;
};

namespace detail {

struct Outcome {
    bool pass = true;
    std::string detail;
};

inline Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. Witt formula equals Lyndon enumeration for m <= 3, n <= 16.
inline Outcome witt_lyndon_oracle() {
    for (long m = 1; m <= 3; ++m)
        for (long n = 1; n <= 16; ++n)
            if (witt_dim(m, n) != lyndon_count(m, n))
                return fail("witt_dim(" + std::to_string(m) + "," + std::to_string(n) +
                            ") != lyndon count");
    return {true, "witt_dim == |lyndon_words| for all m <= 3, n <= 16"};
}

// 2. witt_dim(2, p^2) === 0 mod 4 for p in {3,5,7,11,13}.
inline Outcome witt_mod4() {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        const Integer w = witt_dim(2, p * p);
        if (w % 4 != 0)
            return fail("witt_dim(2," + std::to_string(p * p) + ") = " + w.str() + " not 0 mod 4");
    }
    return {true, "witt_dim(2, p^2) === 0 (mod 4) for p in {3,5,7,11,13}"};
}

// 3. beta_k^2 = k beta_k and (1/k) beta_k idempotent as operator matrices.
inline Outcome dsw_identities() {
    for (int k = 2; k <= 5; ++k) {
        const GroupAlgebraElement beta = dsw(k);
        for (int p : {2, 3, 5, 7}) {
            if (k % p == 0)
                continue;
            for (int dim = 1; dim <= 3; ++dim) {
                const std::pair<GradedSpace, SignMode> runs[] = {
                    {GradedSpace::uniform(p, dim, 1), SignMode::Unsigned},
                    {GradedSpace::uniform(p, dim, 2), SignMode::Koszul},  // all even
                    {GradedSpace::uniform(p, dim, 1), SignMode::Koszul},  // all odd
                };
                for (const auto& [space, mode] : runs) {
                    const PrimeFieldMatrix m = operator_matrix(beta, space, k, mode);
                    if (!(m * m == m.scaled(k)))
                        return fail("beta_k^2 != k beta_k at k=" + std::to_string(k) +
                                    ", p=" + std::to_string(p) + ", dim=" + std::to_string(dim));
                    const PrimeFieldMatrix e =
                        operator_matrix(scaled_by_inverse(beta, k, p), space, k, mode);
                    if (!(e * e == e))
                        return fail("(1/k) beta_k not idempotent at k=" + std::to_string(k) +
                                    ", p=" + std::to_string(p) + ", dim=" + std::to_string(dim));
                }
            }
        }
    }
    return {true, "beta_k^2 = k beta_k and (1/k) beta_k idempotent, k <= 5, p in {2,3,5,7}, both sign modes"};
}

// 4. Relation kernel of the symmetrized insertion vectors.
inline Outcome lemma51_reproduction() {
    for (const auto& [l, p] : {std::pair{2, 5}, std::pair{3, 7}}) {
        const Lemma51Report rep = lemma51_relations(l, p, Parity::AllEven);
        if (rep.kernel_dimension != static_cast<std::size_t>(l))
            return fail("kernel dimension != l at (l,p) = (" + std::to_string(l) + "," + std::to_string(p) + ")");
        if (!rep.pattern_ok)
            return fail("kernel vectors violate the alternating pattern at l=" + std::to_string(l));
        if (rep.dropped_kernel_dimension != 0)
            return fail("dropping the last family left a nonzero kernel at l=" + std::to_string(l));
        Integer factorial = 1;
        for (int t = 2; t <= l + 1; ++t)
            factorial *= t;
        if (Integer(rep.distinct_monomials) != Integer(l) * factorial / 2 || !rep.each_monomial_twice)
            return fail("monomial side count failed at l=" + std::to_string(l));
    }
    return {true, "kernel dim = l, alternating pattern, dropped-family kernel 0, l(l+1)!/2 monomials twice"};
}

// 5. Lambda algebra soundness: d*d = 0, rewrite/differential compatibility,
// lambda_i lambda_{2i+1} = 0.
inline Outcome lambda_soundness() {
    // d(m . lambda_0^t) = d(m) . lambda_0^t, so zero tails never disturb
    // d*d; tails are still exercised through t = 2.
    for (long deg = 0; deg <= 20; ++deg)
        for (int len = 0; len <= deg + 2; ++len)
            for (const auto& m : lambda::basis(len, deg)) {
                long zeros = 0;
                for (auto it = m.rbegin(); it != m.rend() && *it == 0; ++it)
                    ++zeros;
                if (zeros > 2)
                    continue;
                if (!lambda::differential(lambda::differential(m)).is_zero())
                    return fail("d(d(m)) != 0 for a monomial of degree " + std::to_string(deg));
            }

    for (int i = 0; 3 * i + 1 <= 20; ++i)
        for (int k = 0; 3 * i + 1 + k <= 20; ++k) {
            const lambda::Mono pair{i, 2 * i + 1 + k};
            lambda::Element direct = lambda::differential(lambda::straighten(pair));
            lambda::Element via_leibniz;
            for (const auto& [x, y] : lambda::differential_of_generator(pair[0]))
                via_leibniz += lambda::straighten({x, y, pair[1]});
            for (const auto& [x, y] : lambda::differential_of_generator(pair[1]))
                via_leibniz += lambda::straighten({pair[0], x, y});
            if (!(direct == via_leibniz))
                return fail("straighten/differential compatibility failed for pair (" +
                            std::to_string(i) + "," + std::to_string(2 * i + 1 + k) + ")");
        }

    for (int i = 0; i <= 6; ++i)
        if (!lambda::straighten({i, 2 * i + 1}).is_zero())
            return fail("lambda_i lambda_{2i+1} != 0 at i = " + std::to_string(i));
    return {true, "d*d = 0 through degree 20, rewrite/differential compatible, lambda_i lambda_{2i+1} = 0"};
}

// 6. Positive-ending basis count stays under C(2q, q-1) for q <= 14.
inline Outcome appendix_bound() {
    for (long q = 0; q <= 14; ++q) {
        const lambda::TildeCount c = lambda::tilde_dim_upto(q);
        if (c.count > c.bound)
            return fail("count exceeds C(2q, q-1) at q = " + std::to_string(q));
        if (q == 2 && (c.count != 3 || c.bound != 4))
            return fail("q = 2 expected count 3 <= bound 4");
    }
    return {true, "dim through degree q stays under C(2q, q-1) for q <= 14; q=2 gives 3 <= 4"};
}

// 7. Smash power matches C(k-1, j); embedding recurrence gives (3s+2, 2^s).
inline Outcome moore_smash_calculus() {
    for (int k = 1; k <= 10; ++k) {
        const int n = 4;
        const MooreWedge w = smash_power(n, k, 5, 1);
        for (int j = 0; j <= k - 1; ++j) {
            auto it = w.coefficients.find(k * n - j);
            if (it == w.coefficients.end() || it->second != binomial(k - 1, j))
                return fail("smash power coefficient != C(k-1,j) at k=" + std::to_string(k));
        }
        if (w.coefficients.size() != static_cast<std::size_t>(k))
            return fail("smash power has spurious dimensions at k=" + std::to_string(k));
    }
    for (long s = 0; s <= 20; ++s) {
        const EmbeddingCount e = mod2_embedding_count(s);
        if (e.dimension != 3 * s + 2 || e.count != ipow(2, static_cast<unsigned long>(s)))
            return fail("embedding count != (3s+2, 2^s) at s=" + std::to_string(s));
    }
    return {true, "pairwise rule gives C(k-1,j) for k <= 10; embedding recurrence gives (3s+2, 2^s) for s <= 20"};
}

// 8. Multidegree counts sum to the Witt dimension; W(21) = 99858.
inline Outcome hilton_milnor_counts() {
    for (long w = 1; w <= 16; ++w) {
        Integer total = 0;
        for (long a1 = 0; a1 <= w; ++a1)
            total += multidegree_count(a1, w - a1);
        if (total != witt_dim(2, w))
            return fail("multidegree sum != witt_dim at w=" + std::to_string(w));
    }
    if (witt_dim(2, 21) != 99858)
        return fail("W(21) != 99858");
    return {true, "sum of multidegree counts = witt_dim(2,w) for w <= 16; W(21) = 99858"};
}

// 9. The mod-2 Moore schedule at (3, 2): degrees 27s+14, counts 2^s W(2s+1),
// positive certificate with limit ln2/9 and empirical rate within 5%.
inline Outcome mod2_moore_schedule() {
    const GrowthSchedule g = schedule_mod2_moore(3, 2, 100);
    for (const auto& e : g.entries) {
        if (e.degree != 27 * e.s + 14)
            return fail("degree != 27s+14 at s=" + std::to_string(e.s));
        if (e.count != ipow(2, static_cast<unsigned long>(e.s)) * witt_dim(2, 2 * e.s + 1))
            return fail("count != 2^s W(2s+1) at s=" + std::to_string(e.s));
    }
    const RateCertificate cert = certify(g);
    if (!cert.positive)
        return fail("certificate not positive");
    if (cert.limit_coef_ln2 != Rational(1, 9))
        return fail("analytic limit != ln2/9");
    const Rational lim_lo = cert.analytic_limit.lo, lim_hi = cert.analytic_limit.hi;
    if (!(cert.empirical_rate.hi <= lim_hi * Rational(105, 100) &&
          cert.empirical_rate.lo >= lim_lo * Rational(95, 100)))
        return fail("empirical rate at s=100 not within 5% of the limit");
    return {true, "degrees 27s+14, counts 2^s W(2s+1), positive, limit ln2/9, empirical within 5%"};
}

// 10. Congruence solver vs exhaustive search; Euclidean schedule identity
// and gap bound across a parameter grid, s <= 1000.
inline Outcome suspension_arithmetic() {
    for (long A = 1; A <= 12; ++A)
        for (long M = 1; M <= 6; ++M)
            for (long l = 1; l <= 6; ++l)
                for (long a = 0; a < A; ++a)
                    for (long i = 0; i < A; ++i) {
                        std::vector<long> solutions;
                        for (long n = 0; n < A; ++n) {
                            // full expression A(nl+1)n' + (M+li)n + i + 1 === a,
                            // checked for several n' to confirm n' drops out
                            bool all = true;
                            for (long np = 0; np <= 2; ++np) {
                                const long lhs = A * (n * l + 1) * np + (M + l * i) * n + i + 1;
                                if (((lhs - a) % A + A) % A != 0)
                                    all = false;
                            }
                            const long red = (((M + l * i) * n - (a - i - 1)) % A + A) % A;
                            if (all != (red == 0))
                                return fail("brute force disagrees with itself (n' dependence)");
                            if (all)
                                solutions.push_back(n);
                        }
                        const auto got = solve_suspension_congruence(M, l, A, a, i);
                        if (got.has_value() != (solutions.size() == 1))
                            return fail("solver/brute-force mismatch at A=" + std::to_string(A));
                        if (got && *got != solutions.front())
                            return fail("solver residue mismatch at A=" + std::to_string(A));
                    }

    for (long M : {1L, 2L, 3L})
        for (long l : {1L, 2L, 3L})
            for (long n0 : {1L, 2L, 3L})
                for (long A : {1L, 2L, 3L, 5L, 7L, 12L})
                    for (auto variant : {SuspensionVariant::Single, SuspensionVariant::Doubled}) {
                        HyperbolicityParams params;
                        params.M = M;
                        params.l = l;
                        params.n0 = n0;
                        params.A = A;
                        // division identity and gap bound are asserted inside
                        const EuclidSchedule sched = euclid_schedule(params, 1000, variant);
                        for (const auto& st : sched.steps)
                            if (st.N * A + st.i != sched.slope * st.s + sched.offset)
                                return fail("division identity failed");
                    }
    return {true, "congruence solver matches exhaustive search; Euclid identity and gap bound hold to s = 1000"};
}

// 11. Cover liminf equals direct liminf for all eventually-periodic
// sequences with period <= 6 over a 5-value alphabet.
inline Outcome liminf_cover() {
    const std::vector<Rational> alphabet = {Rational(-1), Rational(0), Rational(1, 2), Rational(1),
                                            Rational(2)};
    const std::vector<Rational> prefix = {Rational(9), Rational(-9)};
    for (int period = 1; period <= 6; ++period) {
        std::vector<std::size_t> idx(period, 0);
        while (true) {
            PeriodicSequence seq;
            seq.prefix = prefix;
            for (int t = 0; t < period; ++t)
                seq.period.push_back(alphabet[idx[t]]);
            // direct oracle: only period values recur infinitely often
            Rational direct = seq.period[0];
            for (const auto& v : seq.period)
                direct = std::min(direct, v);

            for (long step : {static_cast<long>(period), static_cast<long>(period) + 1}) {
                SequenceCover cover;
                cover.base = seq;
                for (long off = 0; off < step; ++off)
                    cover.subsequences.push_back({off, step});
                if (liminf_min_of_cover(cover) != direct)
                    return fail("cover liminf != direct liminf at period " + std::to_string(period));
            }

            int pos = period - 1;
            while (pos >= 0 && ++idx[pos] == alphabet.size()) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
    return {true, "cover liminf = direct liminf, exhaustive over period <= 6, 5-value alphabet"};
}

// 12. rank(beta_k) on an m-dimensional ungraded space equals witt_dim(m, k).
inline Outcome dsw_witt_rank() {
    for (int k = 2; k <= 4; ++k) {
        const GroupAlgebraElement beta = dsw(k);
        for (int p : {2, 3, 5, 7}) {
            if (k % p == 0)
                continue;
            for (int m = 1; m <= 3; ++m) {
                const GradedSpace space = GradedSpace::uniform(p, m, 1);
                const std::size_t r = rank(operator_matrix(beta, space, k, SignMode::Unsigned));
                if (Integer(r) != witt_dim(m, k))
                    return fail("rank(beta_k) != witt_dim at k=" + std::to_string(k) +
                                ", m=" + std::to_string(m) + ", p=" + std::to_string(p));
            }
        }
    }
    return {true, "rank of beta_k equals witt_dim(m, k) for k <= 4, m <= 3, gcd(p, k) = 1"};
}

}  // namespace detail

inline std::vector<CriterionResult> run_all() {
    struct Spec {
        int id;
        const char* name;
        double budget;
        detail::Outcome (*fn)();
    };
    const Spec specs[] = {
        {1, "witt-lyndon oracle equality", 5.0, detail::witt_lyndon_oracle},
        {2, "witt mod-4 divisibility", 1.0, detail::witt_mod4},
        {3, "dsw operator identities", 30.0, detail::dsw_identities},
        {4, "symmetrized-insertion relation kernel", 60.0, detail::lemma51_reproduction},
        {5, "lambda algebra soundness", 120.0, detail::lambda_soundness},
        {6, "positive-ending basis bound", 60.0, detail::appendix_bound},
        {7, "moore smash calculus", 1.0, detail::moore_smash_calculus},
        {8, "hilton-milnor counts", 1.0, detail::hilton_milnor_counts},
        {9, "mod-2 moore schedule and certificate", 5.0, detail::mod2_moore_schedule},
        {10, "suspension congruence and euclid schedule", 30.0, detail::suspension_arithmetic},
        {11, "cover liminf utility", 10.0, detail::liminf_cover},
        {12, "dsw rank vs witt dimension", 30.0, detail::dsw_witt_rank},
    };
    std::vector<CriterionResult> results;
    for (const auto& spec : specs) {
        CriterionResult r;
        r.id = spec.id;
        r.name = spec.name;
        r.budget_seconds = spec.budget;
        const auto start = std::chrono::steady_clock::now();
        try {
            const detail::Outcome o = spec.fn();
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && r.seconds > r.budget_seconds) {
            r.pass = false;
            r.detail += " (over time budget)";
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace tgl::acceptance
