#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tgl {

// All counting is exact: arbitrary-precision integers and rationals
// throughout, never floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline void require(bool cond, const std::string& what) {
    if (!cond)
        throw std::invalid_argument(what);
}

// Desk-scale cap for enumerative operations (lambda basis degree, homology
// tables). Overridable via the TGL_MAX_DEGREE environment variable.
inline long max_degree_cap() {
    if (const char* env = std::getenv("TGL_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 30;
}

inline Integer ipow(Integer base, unsigned long exp) {
    Integer r = 1;
    while (exp) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// C(n, k) with C(n, k) = 0 for n < 0, k < 0 or k > n; exact.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // divides exactly: r is always C(n-k+j, j)
    }
    return r;
}

}  // namespace tgl
