#pragma once

// Small exact integer helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sds/error.hpp"

namespace sds {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer addition overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer multiplication overflow");
    return r;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 pow_mod(i64 base, i64 exp, i64 m)
{
    if (m == 1) return 0;
    __int128 result = 1;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<i64>(result);
}

/// Floor square root; exact for all nonnegative 64-bit inputs.
inline i64 isqrt(i64 n)
{
    if (n < 0) return -1;
    i64 r = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline std::optional<i64> exact_sqrt(i64 n)
{
    if (n < 0) return std::nullopt;
    i64 r = isqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline bool is_prime(i64 n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<i64, int>> factorize(i64 n)
{
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// (p, k) with q = p^k, or nullopt if q is not a prime power.
inline std::optional<std::pair<i64, int>> prime_power(i64 q)
{
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline i64 lcm_of(const std::vector<i64>& xs)
{
    i64 l = 1;
    for (i64 x : xs) l = checked_mul(l / std::gcd(l, x), x);
    return l;
}

/// Multiplicative order of t modulo m; requires gcd(t, m) = 1.
inline i64 multiplicative_order(i64 t, i64 m)
{
    if (m == 1) return 1;
    i64 x = mod(t, m);
    i64 k = 1;
    i64 cur = x;
    while (cur != 1) {
        cur = static_cast<i64>(static_cast<__int128>(cur) * x % m);
        ++k;
    }
    return k;
}

} // namespace sds
