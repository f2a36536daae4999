#include <catch2/catch_amalgamated.hpp>

#include "tgl/growth.hpp"

using namespace tgl;

TEST_CASE("certified log sandwiches") {
    const RatInterval l2 = ln2_interval();
    CHECK(l2.width() <= Rational(1, Integer("1000000000000")));
    CHECK(l2.lo <= Rational(693147181, 1000000000));
    CHECK(l2.hi >= Rational(693147180, 1000000000));

    const RatInterval one = ln_interval(Rational(1));
    CHECK(one.lo == 0);
    CHECK(one.hi == 0);

    // ln 8 = 3 ln 2
    const RatInterval l8 = ln_interval(Integer(8));
    CHECK(l8.lo <= 3 * l2.hi);
    CHECK(l8.hi >= 3 * l2.lo);
    CHECK(l8.width() <= Rational(1, Integer("100000000000")));

    // a big power of two
    const RatInterval big = ln_interval(ipow(2, 100));
    CHECK(big.lo <= 100 * l2.hi);
    CHECK(big.hi >= 100 * l2.lo);

    CHECK_THROWS_AS(ln_interval(Rational(0)), std::invalid_argument);
}

TEST_CASE("gcd condition") {
    CHECK(check_gcd_condition(1, 1, 1));
    CHECK_FALSE(check_gcd_condition(2, 2, 2));
    // values 1, 3, 5 against A = 3: gcd(3, 3) = 3 at i = 1
    CHECK_FALSE(check_gcd_condition(1, 2, 3));
    CHECK(check_gcd_condition(1, 2, 2));   // values 1, 3 against A = 2
    CHECK_FALSE(check_gcd_condition(1, 1, 2));  // value 2 at i = 1
}

TEST_CASE("suspension congruence solver") {
    CHECK(solve_suspension_congruence(1, 1, 2, 0, 0) == 1);
    CHECK(solve_suspension_congruence(3, 2, 1, 0, 0) == 0);  // A = 1: every n
    // coeff 0, rhs 1: unsolvable
    CHECK_FALSE(solve_suspension_congruence(2, 2, 2, 0, 0).has_value());

    for (long A = 1; A <= 8; ++A)
        for (long M = 1; M <= 4; ++M)
            for (long l = 1; l <= 4; ++l)
                for (long a = 0; a < A; ++a)
                    for (long i = 0; i < A; ++i) {
                        std::vector<long> solutions;
                        for (long n = 0; n < A; ++n)
                            if ((((M + l * i) * n - (a - i - 1)) % A + A) % A == 0)
                                solutions.push_back(n);
                        const auto got = solve_suspension_congruence(M, l, A, a, i);
                        CHECK(got.has_value() == (solutions.size() == 1));
                        if (got)
                            CHECK(*got == solutions.front());
                    }
}

TEST_CASE("doubling multiplicity") {
    const DoublingTrace t = doubling_multiplicity(2, 3);
    CHECK(t.multiplicity == 8);
    CHECK(t.counts == std::vector<Integer>{2, 4, 8});
    CHECK(doubling_multiplicity(1, 5).multiplicity == 1);
    CHECK(doubling_multiplicity(2, 0).multiplicity == 1);
    for (long s = 0; s < 6; ++s)
        CHECK(doubling_multiplicity(3, s + 1).multiplicity == 3 * doubling_multiplicity(3, s).multiplicity);
}

TEST_CASE("euclid schedule at A = 1 and against direct division") {
    HyperbolicityParams params;
    params.M = 2;
    params.l = 1;
    params.n0 = 1;
    params.A = 1;
    const EuclidSchedule one = euclid_schedule(params, 10);
    for (const auto& st : one.steps) {
        CHECK(st.i == 0);
        CHECK(st.N == one.slope * st.s + one.offset);
    }

    params.M = 1;
    params.l = 1;
    params.n0 = 2;
    params.A = 3;
    const EuclidSchedule s3 = euclid_schedule(params, 1000);
    // D = (n0 l + 1)(n0 + n0 l / 2) = 3 * 3 = 9, slope = (9+2)*2 + 2 = 24
    CHECK(s3.D == 9);
    CHECK(s3.slope == 24);
    CHECK(s3.offset == 12);
    for (const auto& st : s3.steps) {
        const Integer value = 24 * st.s + 12;
        CHECK(st.N == value / 3);
        CHECK(st.i == value % 3);
        CHECK(st.degree == value);
    }
    for (std::size_t t = 1; t < s3.steps.size(); ++t) {
        CHECK(s3.steps[t].N > s3.steps[t - 1].N);  // positive slope
        CHECK(s3.steps[t].N - s3.steps[t - 1].N < s3.gap_bound);
    }
}

TEST_CASE("doubled-suspension euclid schedule reports odd degrees") {
    HyperbolicityParams params;
    params.M = 1;
    params.l = 2;
    params.n0 = 1;
    params.A = 2;
    const EuclidSchedule s = euclid_schedule(params, 20, SuspensionVariant::Doubled);
    for (const auto& st : s.steps) {
        CHECK(st.degree % 2 == 1);
        CHECK(st.degree == 2 * (st.N * 2 + st.i) + 1);
    }
}

TEST_CASE("mod-2 moore schedule values") {
    const GrowthSchedule g = schedule_mod2_moore(3, 2, 10);
    REQUIRE(g.entries.size() == 11);
    CHECK(g.entries[0].degree == 14);
    CHECK(g.entries[0].count == 2);  // 2^0 * W(1)
    CHECK(g.entries[1].degree == 41);
    CHECK(g.entries[1].count == 2 * witt_dim(2, 3));
    CHECK(g.entries[10].degree == 284);
    CHECK(g.entries[10].count == Integer(1024) * 99858);
    for (std::size_t t = 1; t < g.entries.size(); ++t)
        CHECK(g.entries[t].degree - g.entries[t - 1].degree == 27);  // slope 2 p^2 n - p^2
    CHECK(g.limit_coef_ln2 == Rational(1, 9));

    // each step at least doubles the count
    for (std::size_t t = 1; t < g.entries.size(); ++t)
        CHECK(g.entries[t].count >= 2 * g.entries[t - 1].count);
}

TEST_CASE("odd moore schedule values") {
    const GrowthSchedule g = schedule_odd_moore(3, 1, 8, 8, 30);
    CHECK(g.entries[0].s == 1);
    CHECK(g.entries[0].degree == 56);
    CHECK(g.entries[0].count == 4);  // W(1) * 2
    CHECK(g.limit_coef_ln2 == Rational(1, 28));  // 2 / (7 * 8)
    CHECK(odd_moore_threshold(3, 8, 8) == 7);    // ceil(2p(n_alpha+1)/n_beta)
    for (std::size_t t = 1; t < g.entries.size(); ++t)
        CHECK(g.entries[t].degree - g.entries[t - 1].degree == 56);

    // the count ratio dips exactly once, at s = 1 -> 2 (W(2) = 1 < W(1) = 2)
    CHECK(g.entries[1].count == g.entries[0].count);
    for (std::size_t t = 2; t < g.entries.size(); ++t)
        CHECK(g.entries[t].count >= 2 * g.entries[t - 1].count);

    // p = 2 demands r >= 2; the r >= 2 regime reuses the same schedule
    CHECK_THROWS_AS(schedule_odd_moore(2, 1, 8, 8, 5), std::invalid_argument);
    CHECK(schedule_odd_moore(2, 2, 8, 8, 5).entries[0].degree == 40);
}

TEST_CASE("certificates for the moore schedules") {
    const RateCertificate m2 = certify(schedule_mod2_moore(3, 2, 100));
    CHECK(m2.positive);
    CHECK(m2.limit_coef_ln2 == Rational(1, 9));
    CHECK(m2.certified_lower_bound > 0);
    // empirical rate at s = 100 is about 0.0749, limit about 0.0770
    CHECK(m2.empirical_rate.hi <= m2.analytic_limit.hi * Rational(105, 100));
    CHECK(m2.empirical_rate.lo >= m2.analytic_limit.lo * Rational(95, 100));

    const RateCertificate om = certify(schedule_odd_moore(3, 1, 8, 8, 100));
    CHECK(om.positive);
    CHECK(om.limit_coef_ln2 == Rational(1, 28));
    CHECK(om.empirical_rate.hi <= om.analytic_limit.hi * Rational(105, 100));
    CHECK(om.empirical_rate.lo >= om.analytic_limit.lo * Rational(95, 100));
}

TEST_CASE("constant-count schedules are never positive") {
    GrowthSchedule g;
    g.description = "constant counts";
    for (long s = 1; s <= 10; ++s)
        g.entries.push_back({s, Integer(10 * s), Integer(1)});
    const RateCertificate cert = certify(g);
    CHECK_FALSE(cert.positive);
    CHECK(cert.empirical_rate.lo == 0);
    CHECK(cert.empirical_rate.hi == 0);
}

TEST_CASE("liminf of covering subsequences") {
    PeriodicSequence alt;
    alt.period = {Rational(1), Rational(2)};
    SequenceCover odds_evens{alt, {{0, 2}, {1, 2}}};
    CHECK(liminf_min_of_cover(odds_evens) == 1);

    SequenceCover whole{alt, {{0, 1}}};
    CHECK(liminf_min_of_cover(whole) == 1);

    PeriodicSequence with_prefix;
    with_prefix.prefix = {Rational(-5)};
    with_prefix.period = {Rational(3), Rational(7), Rational(2)};
    SequenceCover c{with_prefix, {{0, 2}, {1, 2}}};
    CHECK(liminf_min_of_cover(c) == 2);  // prefix ignored

    LogAffineSequence rate{Rational(0), Rational(3), Rational(0), Rational(27), Rational(14)};
    SequenceCover lr{rate, {{0, 1}}};
    CHECK(liminf_min_of_cover(lr) == Rational(1, 9));

    SequenceCover gap{alt, {{0, 2}}};  // misses the odd indices
    CHECK_THROWS_AS(liminf_min_of_cover(gap), std::invalid_argument);
}

TEST_CASE("log-affine tail start is certified") {
    // f(s) = (ln s + s)/s -> 1, |f(s) - 1| = ln(s)/s
    LogAffineSequence seq{Rational(1), Rational(1), Rational(0), Rational(1), Rational(0)};
    const Rational tol(1, 10);
    const Integer s0 = log_affine_tail_start(seq, tol);
    CHECK(s0 >= 1);
    for (const Integer& s : {s0, 2 * s0, 16 * s0})
        CHECK(ln_interval(s).hi / Rational(s) <= tol);
}

TEST_CASE("suspension-retract certificate") {
    HyperbolicityParams params;
    params.p = 2;
    params.r = 1;
    params.M = 1;
    params.l = 2;
    params.A = 2;
    params.a = 0;
    params.K = 3;
    params.n0 = 1;
    REQUIRE(check_gcd_condition(params.M, params.l, params.A));

    const SuspensionRetractCertificate cert = certify_suspension_retract(params, 40);
    CHECK(cert.k_tilde == 4);
    CHECK(cert.euclid.D == 6);       // (1*2+1)(1 + 1) = 6
    CHECK(cert.euclid.slope == 15);  // (6+1)*1*2*1 + 1
    CHECK(cert.congruence_residues.size() == 2);
    CHECK(cert.schedule.limit_coef_ln2 == Rational(2 * 3, 4 * 15));
    CHECK(cert.rate.positive);
    // counts follow 2^s W(s n0 l + 1)
    CHECK(cert.schedule.entries[0].count == 2 * witt_dim(2, 3));

    // doubled variant also runs and stays positive
    const SuspensionRetractCertificate doubled =
        certify_suspension_retract(params, 40, SuspensionVariant::Doubled);
    CHECK(doubled.rate.positive);
}

TEST_CASE("certificate refusal names the failing index") {
    HyperbolicityParams params;
    params.M = 2;
    params.l = 2;
    params.A = 2;
    try {
        certify_suspension_retract(params, 10);
        FAIL("expected refusal");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("i = 0") != std::string::npos);
    }
}

TEST_CASE("appendix bound report") {
    const AppendixBoundReport r11 = appendix_upper_bound(1, 1);
    CHECK(r11.lambda_count == 1);
    CHECK(r11.lambda_bound == 1);
    CHECK(r11.tensor_count == 2);
    CHECK_FALSE(r11.tensor_has_witness);
    CHECK(r11.pass);

    const AppendixBoundReport r22 = appendix_upper_bound(2, 2);
    CHECK(r22.lambda_count == 3);
    CHECK(r22.lambda_bound == 4);
    CHECK(r22.tensor_count == 7);
    CHECK(r22.tensor_c1 == 2);
    CHECK(r22.pass);

    for (long q = 1; q <= 12; ++q) {
        const auto cur = appendix_upper_bound(2, q);
        const auto nxt = appendix_upper_bound(2, q + 1);
        CHECK(cur.pass);
        CHECK(nxt.lambda_bound >= cur.lambda_bound);
        CHECK(nxt.product_bound >= cur.product_bound);
    }
}

TEST_CASE("schedule validation rejects bad data") {
    GrowthSchedule g;
    g.entries.push_back({0, Integer(5), Integer(1)});
    g.entries.push_back({1, Integer(5), Integer(2)});
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g.entries[1].degree = 4;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g.entries[1].degree = 6;
    g.entries[1].count = 0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}
