#pragma once

// Degree/count schedules and exponential-growth certificates. The homotopy
// hypotheses behind a schedule (retract existence, splitting multiplicity,
// torsion summand families) are recorded inputs, never conclusions: every
// certificate states that its verdict is conditional on them. Given those
// inputs the arithmetic here is exact, and a positive verdict rests on a
// certified rational lower bound of the analytic limit.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tgl/common.hpp"
#include "tgl/free_lie.hpp"
#include "tgl/lambda.hpp"
#include "tgl/log_bounds.hpp"

namespace tgl {

// ---------------------------------------------------------------------------
// Parameter records and elementary arithmetic steps
// ---------------------------------------------------------------------------

/// Inputs of the suspension-retract growth argument. M, l: suspension/smash
/// slopes of the retract hypothesis; (A, a) and (K, k): the arithmetic
/// progression and degree law of the assumed torsion family; n0: the chosen
/// witness index; (p, r): the certified summand is Z/p^r.
struct HyperbolicityParams {
    int p = 2;
    int r = 1;
    long M = 1;
    long l = 1;
    long A = 1;
    long a = 0;
    long K = 1;
    long k = 0;
    long n0 = 1;
};

/// Thm-2.2-style runs use single suspensions; the odd-prime variant doubles
/// every suspension exponent.
enum class SuspensionVariant { Single, Doubled };

/// gcd(M + l*i, A) = 1 for every 0 <= i <= A-1.
inline bool check_gcd_condition(long M, long l, long A) {
    require(A >= 1 && M >= 1 && l >= 1, "check_gcd_condition: positive parameters required");
    for (long i = 0; i < A; ++i)
        if (std::gcd(M + l * i, A) != 1)
            return false;
    return true;
}

/// Unique residue n (mod A) with (M + l*i) n === a - i - 1 (mod A), when
/// gcd(M + l*i, A) = 1; empty otherwise. The quadratic term of the full
/// congruence vanishes mod A, leaving this linear one.
inline std::optional<long> solve_suspension_congruence(long M, long l, long A, long a, long i) {
    require(A >= 1, "solve_suspension_congruence: A >= 1");
    require(0 <= i && i < A, "solve_suspension_congruence: i out of [0, A-1]");
    const long coeff = ((M + l * i) % A + A) % A;
    const long rhs = ((a - i - 1) % A + A) % A;
    if (A == 1)
        return 0;
    if (std::gcd(coeff, A) != 1)
        return std::nullopt;
    for (long n = 0; n < A; ++n)
        if ((coeff * n) % A == rhs)
            return n;
    return std::nullopt;  // unreachable: a unit always has a solution
}

struct DoublingTrace {
    Integer multiplicity;         // base^s
    std::vector<Integer> counts;  // count after each smash-and-split step
};

/// base^s with the iteration trace mirroring the inductive splitting: each
/// step smashes the current retract with the next smash block and applies
/// the base-fold splitting.
inline DoublingTrace doubling_multiplicity(const Integer& base, long s) {
    require(base >= 1 && s >= 0, "doubling_multiplicity: need base >= 1, s >= 0");
    DoublingTrace t;
    t.multiplicity = 1;
    for (long step = 0; step < s; ++step) {
        t.multiplicity *= base;
        t.counts.push_back(t.multiplicity);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Euclidean degree schedule
// ---------------------------------------------------------------------------

struct EuclidStep {
    long s = 0;
    Integer N;       // quotient
    long i = 0;      // remainder in [0, A)
    Integer degree;  // N*A + i (single) or 2*N*A + 2*i + 1 (doubled)
};

struct EuclidSchedule {
    Integer D;          // weight-block suspension constant
    Integer slope;      // divided expression is slope*s + offset
    Integer offset;
    Integer gap_bound;  // c with N(s+1) - N(s) < c
    std::vector<EuclidStep> steps;
};

/// Euclidean division of the degree expression by A. The divided expression
/// is (s n0 l + 1)(D + n0) M + s n0 M + 1 in the single-suspension variant;
/// the doubled variant divides the same expression without the trailing +1
/// and reports degree 2 N A + 2 i + 1. D = (n0 l + 1)(n0 + n0 l / 2), which
/// is integral for every n0, l since n0 l (n0 l + 1) is even; the guard stays
/// anyway. The gap bound c = ceil(slope/A) + 1 satisfies N(s+1) - N(s) < c.
inline EuclidSchedule euclid_schedule(const HyperbolicityParams& params, long s_max,
                                      SuspensionVariant variant = SuspensionVariant::Single) {
    const long n0 = params.n0, l = params.l, M = params.M, A = params.A;
    require(n0 >= 1 && l >= 1 && M >= 1 && A >= 1, "euclid_schedule: positive parameters required");
    require(s_max >= 1, "euclid_schedule: need s_max >= 1");

    const Rational d_rat = Rational(Integer(n0) * l + 1) * (Rational(n0) + Rational(Integer(n0) * l, 2));
    require(denominator(d_rat) == 1, "euclid_schedule: non-integral suspension constant D");

    EuclidSchedule sched;
    sched.D = numerator(d_rat);
    sched.slope = (sched.D + n0) * n0 * l * M + Integer(n0) * M;
    sched.offset = (sched.D + n0) * M + (variant == SuspensionVariant::Single ? 1 : 0);
    sched.gap_bound = (sched.slope + A - 1) / A + 1;  // ceil(slope/A) + 1

    for (long s = 1; s <= s_max; ++s) {
        const Integer value = sched.slope * s + sched.offset;
        EuclidStep step;
        step.s = s;
        step.N = value / A;
        step.i = static_cast<long>(value % A);
        step.degree = variant == SuspensionVariant::Single ? value : 2 * value + 1;
        require(step.N * A + step.i == value && 0 <= step.i && step.i < A,
                "euclid_schedule: division identity failed");
        if (!sched.steps.empty()) {
            const Integer diff = step.N - sched.steps.back().N;
            require(diff >= 0, "euclid_schedule: N not monotone");
            require(diff < sched.gap_bound, "euclid_schedule: gap bound violated");
        }
        sched.steps.push_back(std::move(step));
    }
    return sched;
}

// ---------------------------------------------------------------------------
// Growth schedules
// ---------------------------------------------------------------------------

struct ScheduleEntry {
    long s = 0;
    Integer degree;
    Integer count;
};

enum class Provenance { Mod2Moore, OddMoore, SuspensionRetract, Custom };

/// A sequence of certified lower bounds: at least `count` summands of the
/// stated torsion order appear in degrees <= `degree`. Degrees strictly
/// increase; the analytic liminf of ln(count)/degree, when the generating
/// construction provides one, is coef * ln 2.
struct GrowthSchedule {
    Provenance provenance = Provenance::Custom;
    std::string description;
    std::string hypotheses;  // the assumed homotopy inputs, stated up front
    std::vector<ScheduleEntry> entries;
    bool has_limit = false;
    Rational limit_coef_ln2 = 0;

    void validate() const {
        for (std::size_t t = 0; t < entries.size(); ++t) {
            require(entries[t].count >= 1, "GrowthSchedule: counts must be >= 1");
            if (t > 0)
                require(entries[t].degree > entries[t - 1].degree,
                        "GrowthSchedule: degrees must strictly increase");
        }
    }
};

/// Degree law d(s) = (q n - (q + 3)/2)(2s + 1) + 3s + 2 with q = p_aux^2 and
/// count 2^s W(2s + 1), certifying Z/8 summands for the mod-2 Moore space
/// P^(n+1)(2). Slope in s is 2 q n - q; the analytic rate limit is
/// 3 ln2 / (2 q n - q).
inline GrowthSchedule schedule_mod2_moore(long p_aux, long n, long s_max) {
    require(is_prime(p_aux) && p_aux % 2 == 1, "schedule_mod2_moore: p_aux must be an odd prime");
    require(n >= 2, "schedule_mod2_moore: need n >= 2");
    require(s_max >= 0, "schedule_mod2_moore: need s_max >= 0");
    const Integer q = Integer(p_aux) * p_aux;
    GrowthSchedule g;
    g.provenance = Provenance::Mod2Moore;
    g.description = "mod-2 Moore schedule (p_aux=" + std::to_string(p_aux) + ", n=" + std::to_string(n) + ")";
    g.hypotheses =
        "assumed inputs: Z/8 summands along the arithmetic families of suspended mod-2 Moore "
        "spaces; retracts provided by the odd symmetric-power splitting and the recorded "
        "triple-smash decomposition of the real projective plane";
    for (long s = 0; s <= s_max; ++s) {
        ScheduleEntry e;
        e.s = s;
        e.degree = (q * n - (q + 3) / 2) * (2 * s + 1) + 3 * s + 2;
        e.count = ipow(2, static_cast<unsigned long>(s)) * witt_dim(2, 2 * s + 1);
        g.entries.push_back(std::move(e));
    }
    g.has_limit = true;
    g.limit_coef_ln2 = Rational(3, 2 * q * n - q);
    g.validate();
    return g;
}

/// Smallest s with (2p+1) n_beta s >= 2p (n_beta s + n_alpha + 1): beyond it
/// every window degree clears the torsion-family threshold.
inline long odd_moore_threshold(long p, long n_alpha, long n_beta) {
    return static_cast<long>((2 * p * (n_alpha + 1) + n_beta - 1) / n_beta);  // ceil
}

/// Degree law d(s) = (2p+1) n_beta s and count W(s) 2^s, certifying
/// Z/p^(r+1) summands for P^n(p^r) with p odd (or p = 2, r >= 2, where the
/// same smash rule applies). n_alpha <= n_beta are the two chosen wedge
/// summand dimensions. Analytic rate limit: 2 ln2 / ((2p+1) n_beta).
inline GrowthSchedule schedule_odd_moore(long p, long r, long n_alpha, long n_beta, long s_max) {
    require(is_prime(p), "schedule_odd_moore: p must be prime");
    require(p % 2 == 1 || r >= 2, "schedule_odd_moore: p = 2 requires r >= 2");
    require(r >= 1, "schedule_odd_moore: need r >= 1");
    require(2 <= n_alpha && n_alpha <= n_beta, "schedule_odd_moore: need 2 <= n_alpha <= n_beta");
    require(s_max >= 1, "schedule_odd_moore: need s_max >= 1");
    GrowthSchedule g;
    g.provenance = Provenance::OddMoore;
    g.description = "odd/2^r Moore schedule (p=" + std::to_string(p) + ", r=" + std::to_string(r) +
                    ", n_alpha=" + std::to_string(n_alpha) + ", n_beta=" + std::to_string(n_beta) + ")";
    g.hypotheses =
        "assumed inputs: wedge summand dimensions n_alpha <= n_beta from the loop-space "
        "decomposition; Z/p^(r+1) summands in the stated degree families (for p = 2, r >= 2 "
        "this rests on an order-2^(r+1) class available once the relevant Whitehead product "
        "is not divisible by 2); threshold s >= " +
        std::to_string(odd_moore_threshold(p, n_alpha, n_beta));
    for (long s = 1; s <= s_max; ++s) {
        ScheduleEntry e;
        e.s = s;
        e.degree = Integer(2 * p + 1) * n_beta * s;
        e.count = witt_dim(2, s) * ipow(2, static_cast<unsigned long>(s));
        g.entries.push_back(std::move(e));
    }
    g.has_limit = true;
    g.limit_coef_ln2 = Rational(2, Integer(2 * p + 1) * n_beta);
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// Covering subsequences and their liminf
// ---------------------------------------------------------------------------

/// Indices offset, offset + step, offset + 2 step, ...
struct ArithmeticIndexSet {
    long offset = 0;
    long step = 1;
};

/// value(i) = prefix[i] for i < |prefix|, then period repeats forever.
struct PeriodicSequence {
    std::vector<Rational> prefix;
    std::vector<Rational> period;
};

/// value(s) = (alpha ln s + beta s + gamma) / (delta s + eps) for s >= 1.
struct LogAffineSequence {
    Rational alpha, beta, gamma, delta, eps;
};

struct SequenceCover {
    std::variant<PeriodicSequence, LogAffineSequence> base;
    std::vector<ArithmeticIndexSet> subsequences;
};

namespace detail {

inline void check_cover(const std::vector<ArithmeticIndexSet>& subs) {
    require(!subs.empty(), "liminf_min_of_cover: empty cover");
    long span = 1;
    long max_offset = 0;
    for (const auto& s : subs) {
        require(s.step >= 1 && s.offset >= 0, "liminf_min_of_cover: bad index set");
        span = std::lcm(span, s.step);
        require(span <= 1000000, "liminf_min_of_cover: cover period above desk scale");
        max_offset = std::max(max_offset, s.offset);
    }
    for (long n = max_offset; n < max_offset + span; ++n) {
        bool covered = false;
        for (const auto& s : subs)
            if (n >= s.offset && (n - s.offset) % s.step == 0) {
                covered = true;
                break;
            }
        require(covered, "liminf_min_of_cover: index sets do not eventually cover the base");
    }
}

inline Rational periodic_subsequence_liminf(const PeriodicSequence& seq, const ArithmeticIndexSet& idx) {
    const long L = static_cast<long>(seq.prefix.size());
    const long P = static_cast<long>(seq.period.size());
    require(P >= 1, "liminf: empty period");
    // First t whose index lands in the periodic zone; one full period of t
    // after that visits every position the subsequence hits infinitely often.
    long t0 = 0;
    while (idx.offset + t0 * idx.step < L)
        ++t0;
    Rational best = seq.period[((idx.offset + t0 * idx.step) - L) % P];
    for (long t = t0 + 1; t < t0 + P; ++t) {
        const Rational& v = seq.period[((idx.offset + t * idx.step) - L) % P];
        best = std::min(best, v);
    }
    return best;
}

}  // namespace detail

/// Lower limit of a sequence from covering subsequences: the minimum of the
/// subsequence liminfs (exact for eventually-periodic bases; the limit
/// beta/delta for the log-affine family, which every infinite arithmetic
/// subsequence shares). Validates that the index sets eventually cover.
inline Rational liminf_min_of_cover(const SequenceCover& cover) {
    detail::check_cover(cover.subsequences);
    if (const auto* seq = std::get_if<PeriodicSequence>(&cover.base)) {
        Rational best = detail::periodic_subsequence_liminf(*seq, cover.subsequences.front());
        for (std::size_t j = 1; j < cover.subsequences.size(); ++j)
            best = std::min(best, detail::periodic_subsequence_liminf(*seq, cover.subsequences[j]));
        return best;
    }
    const auto& la = std::get<LogAffineSequence>(cover.base);
    require(la.delta > 0, "liminf_min_of_cover: log-affine family needs delta > 0");
    return la.beta / la.delta;
}

/// Certified tail start for the log-affine family: an s0 with
/// |value(s) - beta/delta| <= tol for every s >= s0, obtained from the
/// monotone dyadic envelope of (|alpha| ln s + |gamma delta - beta eps|) /
/// (delta^2 s) with ln s <= bits(s) * ln2_hi.
inline Integer log_affine_tail_start(const LogAffineSequence& seq, const Rational& tol) {
    require(seq.delta > 0 && tol > 0, "log_affine_tail_start: need delta > 0, tol > 0");
    const Rational ln2_hi = ln2_interval().hi;
    const Rational a = abs(seq.alpha) * seq.delta * ln2_hi;
    const Rational c = abs(seq.gamma * seq.delta - seq.beta * seq.eps);
    const Rational d2 = seq.delta * seq.delta;
    Integer block = 1;  // s in [2^k, 2^(k+1)) has bits(s) = k + 1
    for (long k = 0; k < 512; ++k) {
        const Rational envelope = (a * (k + 1) + c) / (d2 * block);
        if (envelope <= tol)
            return block;
        block *= 2;
    }
    throw std::invalid_argument("log_affine_tail_start: tolerance unreachable at desk scale");
}

// ---------------------------------------------------------------------------
// Rate certificates
// ---------------------------------------------------------------------------

struct RateCertificate {
    std::string schedule_description;
    std::string hypotheses;
    Provenance provenance = Provenance::Custom;
    long max_s = 0;
    RatInterval empirical_rate;       // ln(count)/degree at the largest s
    bool has_limit = false;
    Rational limit_coef_ln2 = 0;      // analytic limit = coef * ln 2
    RatInterval analytic_limit;       // numeric enclosure of the limit
    Rational certified_lower_bound = 0;  // > 0 proves the verdict
    bool positive = false;
};

/// Certificate for a schedule. Positive verdict requires an analytic limit
/// with positive coefficient; its certified lower bound is coef * ln2_lo.
/// Schedules without a generating construction (Custom) are never positive:
/// a finite schedule alone cannot pin a liminf.
inline RateCertificate certify(const GrowthSchedule& schedule,
                               const Rational& eps = default_log_precision()) {
    schedule.validate();
    require(!schedule.entries.empty(), "certify: empty schedule");
    RateCertificate cert;
    cert.schedule_description = schedule.description;
    cert.hypotheses = schedule.hypotheses;
    cert.provenance = schedule.provenance;
    const ScheduleEntry& last = schedule.entries.back();
    cert.max_s = last.s;
    require(last.degree >= 1, "certify: nonpositive degree");
    const RatInterval ln_count = ln_interval(last.count, eps);
    cert.empirical_rate = rat_scale(Rational(1, last.degree), ln_count);
    cert.has_limit = schedule.has_limit;
    if (schedule.has_limit) {
        cert.limit_coef_ln2 = schedule.limit_coef_ln2;
        cert.analytic_limit = rat_scale(schedule.limit_coef_ln2, ln2_interval(eps));
        if (schedule.limit_coef_ln2 > 0) {
            cert.certified_lower_bound = cert.analytic_limit.lo;
            cert.positive = cert.certified_lower_bound > 0;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Suspension-retract runs (parameter mode)
// ---------------------------------------------------------------------------

struct SuspensionRetractCertificate {
    HyperbolicityParams params;
    SuspensionVariant variant = SuspensionVariant::Single;
    std::vector<long> congruence_residues;  // solution n (mod A) per i
    EuclidSchedule euclid;
    GrowthSchedule schedule;
    RateCertificate rate;
    long k_tilde = 0;             // max K^(i) + 1, with K^(i) recorded as K
    Integer cover_count;          // c * k_tilde covering subsequences
};

/// Full parameter-mode run: gcd check (refusal on failure names the first
/// bad i), the congruence solutions, the Euclidean degree schedule, counts
/// 2^s W(s n0 l + 1), and the rate certificate along the covering
/// subsequences {k_tilde N(s) + lambda}. Degrees are k_tilde N(s); when
/// consecutive s share one N the later (larger) count bound is kept.
inline SuspensionRetractCertificate certify_suspension_retract(
    const HyperbolicityParams& params, long s_max,
    SuspensionVariant variant = SuspensionVariant::Single,
    const Rational& eps = default_log_precision()) {
    require(params.K >= 1, "certify: need K >= 1");
    require(params.r >= 1 && is_prime(params.p), "certify: need prime p and r >= 1");
    for (long i = 0; i < params.A; ++i)
        if (std::gcd(params.M + params.l * i, params.A) != 1)
            throw std::domain_error("certificate refused: gcd(M + l*i, A) > 1 at i = " + std::to_string(i));

    SuspensionRetractCertificate out;
    out.params = params;
    out.variant = variant;
    for (long i = 0; i < params.A; ++i) {
        auto n = solve_suspension_congruence(params.M, params.l, params.A, params.a, i);
        require(n.has_value(), "certify: congruence unsolvable despite gcd condition");
        out.congruence_residues.push_back(*n);
    }

    out.euclid = euclid_schedule(params, s_max, variant);
    out.k_tilde = params.K + 1;
    out.cover_count = out.euclid.gap_bound * out.k_tilde;

    GrowthSchedule g;
    g.provenance = Provenance::SuspensionRetract;
    g.description = std::string("suspension-retract schedule (") +
                    (variant == SuspensionVariant::Single ? "single" : "doubled") +
                    " suspensions, p^r = " + std::to_string(params.p) + "^" + std::to_string(params.r) + ")";
    g.hypotheses =
        "assumed inputs: the retract, splitting-multiplicity and torsion-family hypotheses "
        "recorded in the parameters; K^(i) taken equal to the recorded K";
    for (const auto& step : out.euclid.steps) {
        ScheduleEntry e;
        e.s = step.s;
        e.degree = Integer(out.k_tilde) * step.N;
        e.count = ipow(2, static_cast<unsigned long>(step.s)) *
                  witt_dim(2, step.s * params.n0 * params.l + 1);
        if (!g.entries.empty() && g.entries.back().degree == e.degree)
            g.entries.back() = std::move(e);  // same degree: keep the stronger bound
        else
            g.entries.push_back(std::move(e));
    }
    g.has_limit = true;
    // ln count ~ s (1 + n0 l) ln2, degree ~ k_tilde * slope * s / A.
    g.limit_coef_ln2 =
        Rational(Integer(1 + params.n0 * params.l) * params.A, Integer(out.k_tilde) * out.euclid.slope);
    g.validate();
    out.schedule = std::move(g);
    out.rate = certify(out.schedule, eps);
    return out;
}

// ---------------------------------------------------------------------------
// Appendix-style upper bound report
// ---------------------------------------------------------------------------

struct AppendixBoundReport {
    long a = 1;
    long q = 1;
    Integer lambda_count;   // positive-ending admissible monomials, degree <= q
    Integer lambda_bound;   // C(2q, q-1)
    Integer tensor_count;   // sum_{j<=q} a^j
    bool tensor_has_witness = false;
    Rational tensor_c1 = 0;      // a/(a-1) for a >= 2
    Rational tensor_bound = 0;   // c1 * a^q when a witness exists, else the exact count
    Rational product_bound = 0;  // lambda_bound * tensor_bound
    bool pass = false;
};

/// Exact counts against the exponential bound skeleton: the positive-ending
/// lambda basis stays under C(2q, q-1) and the tensor dimension under its
/// geometric witness; the product bounds the torsion count T_(q+1).
inline AppendixBoundReport appendix_upper_bound(long a, long q) {
    require(a >= 1, "appendix_upper_bound: need a >= 1");
    require(q >= 0 && q <= 16, "appendix_upper_bound: q out of desk-scale range [0, 16]");
    AppendixBoundReport rep;
    rep.a = a;
    rep.q = q;
    const lambda::TildeCount tc = lambda::tilde_dim_upto(q);
    rep.lambda_count = tc.count;
    rep.lambda_bound = tc.bound;
    const TensorDimBound td = tensor_dim_upto(a, q);
    rep.tensor_count = td.count;
    rep.tensor_has_witness = td.has_witness;
    rep.tensor_c1 = td.c1;
    rep.tensor_bound = td.has_witness
                           ? td.c1 * Rational(ipow(a, static_cast<unsigned long>(q)))
                           : Rational(td.count);
    rep.product_bound = Rational(rep.lambda_bound) * rep.tensor_bound;
    rep.pass = rep.lambda_count <= rep.lambda_bound && Rational(rep.tensor_count) <= rep.tensor_bound;
    return rep;
}

}  // namespace tgl
