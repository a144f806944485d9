#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace padicdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Sentinel for "valuation of zero"; large enough that it never collides with
// a real valuation but small enough that sums of a few sentinels do not wrap.
inline constexpr long long kInfVal = (1LL << 56);

inline bool is_inf(long long v) { return v >= kInfVal / 2; }

// v_p(n) capped at `cap`; returns cap for n == 0.
inline long vp_of(const BigInt& n, long p, long cap) {
    if (n == 0) return cap;
    BigInt m = n;
    long v = 0;
    while (v < cap && m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

inline BigInt pow_big(const BigInt& b, unsigned long e) {
    BigInt r = 1, x = b;
    unsigned long n = e;
    while (n) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

// Prime factorization by trial division; adequate for residue-field orders.
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int m = 0;
            while (n % d == 0) {
                n /= d;
                ++m;
            }
            out.emplace_back(d, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Exact rational helpers used for coefficient-growth slopes.
inline long long floor_rat(const BigRat& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && (n < 0)) q -= 1;
    return static_cast<long long>(q);
}

inline long long ceil_rat(const BigRat& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && (n > 0)) q += 1;
    return static_cast<long long>(q);
}

} // namespace padicdyn
