#pragma once

// Certified rational sandwiches for natural logarithms. Every bound is an
// exact rational pair [lo, hi] enclosing the true value; positivity verdicts
// downstream rest on these, never on floating point.
//
// ln x is reduced to e*ln 2 + 2*atanh(u) with x = 2^e * m, m in [1, 2) and
// u = (m-1)/(m+1) in [0, 1/3); the atanh series converges geometrically and
// its tail is bounded by u^(2T+3) / ((2T+3)(1-u^2)).

#include "tgl/common.hpp"

namespace tgl {

struct RatInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

inline RatInterval rat_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval rat_scale(const Rational& c, const RatInterval& a) {
    if (c >= 0)
        return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

inline const Rational& default_log_precision() {
    static const Rational eps{1, Integer("1000000000000")};  // 1e-12
    return eps;
}

/// 2*atanh(u) within eps, for rational 0 <= u <= 2/5.
inline RatInterval atanh2_interval(const Rational& u, const Rational& eps) {
    require(u >= 0 && u <= Rational(2, 5), "atanh2_interval: u out of [0, 2/5]");
    require(eps > 0, "atanh2_interval: eps must be positive");
    const Rational u2 = u * u;
    Rational pow = u;  // u^(2t+1)
    Rational sum = 0;
    long t = 0;
    while (true) {
        sum += pow / Rational(2 * t + 1);
        pow *= u2;
        ++t;
        const Rational tail = pow / (Rational(2 * t + 1) * (1 - u2));
        if (2 * tail <= eps)
            return {2 * sum, 2 * (sum + tail)};
    }
}

inline RatInterval ln2_interval(const Rational& eps = default_log_precision()) {
    return atanh2_interval(Rational(1, 3), eps);  // ln 2 = 2 atanh(1/3)
}

inline RatInterval ln_interval(Rational x, const Rational& eps = default_log_precision()) {
    require(x > 0, "ln_interval: argument must be positive");
    long e = 0;
    while (x >= 2) {
        x /= 2;
        ++e;
    }
    while (x < 1) {
        x *= 2;
        --e;
    }
    const RatInterval series = atanh2_interval((x - 1) / (x + 1), eps / 2);
    if (e == 0)
        return series;
    const long mag = e < 0 ? -e : e;
    const RatInterval l2 = ln2_interval(eps / (2 * mag));
    return rat_add(rat_scale(Rational(e), l2), series);
}

inline RatInterval ln_interval(const Integer& n, const Rational& eps = default_log_precision()) {
    return ln_interval(Rational(n), eps);
}

}  // namespace tgl
