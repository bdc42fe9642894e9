#ifndef SALEMFIELD_NUMBERS_HPP
#define SALEMFIELD_NUMBERS_HPP

// Integer-side machinery: deterministic primality, factorization by trial
// division (all inputs here stay far below 2^40), Euler phi, Moebius, divisor
// enumeration, and the two explicit density bounds used by the bounds suite.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "salemfield/errors.hpp"

namespace salemfield {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

struct PrimePower {
    u64 prime;
    u32 exponent;
};

// Trial division with a 2-3-5 wheel; adequate below ~2^40.
inline std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw value_error("factorize: n must be positive");
    std::vector<PrimePower> out;
    auto strip = [&](u64 p) {
        if (n % p) return;
        u32 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    static constexpr u32 wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 f = 7;
    int w = 0;
    while (f <= n / f) {
        strip(f);
        f += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline u64 totient_int(u64 m) {
    if (m == 0) throw value_error("totient_int: m must be positive");
    u64 phi = m;
    for (const auto& pp : factorize(m)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

inline int mobius_int(u64 m) {
    if (m == 0) throw value_error("mobius_int: m must be positive");
    auto fac = factorize(m);
    for (const auto& pp : fac)
        if (pp.exponent > 1) return 0;
    return (fac.size() % 2 == 0) ? 1 : -1;
}

inline std::vector<u64> divisors_int(u64 m) {
    if (m == 0) throw value_error("divisors_int: m must be positive");
    std::vector<u64> divs{1};
    for (const auto& pp : factorize(m)) {
        const std::size_t base = divs.size();
        u64 pe = 1;
        for (u32 e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Number of distinct prime factors.
inline u32 omega_int(u64 m) {
    return static_cast<u32>(factorize(m).size());
}

inline constexpr double kEulerGamma = 0.5772156649015329;

struct BoundReport {
    bool pass;
    double lhs;
    double rhs;
    double margin; // lhs - rhs
};

// phi(m)/m >= (3 / (e^gamma pi^2)) / log log m, valid for m >= 10.
inline BoundReport totient_lower_bound_check(u64 m) {
    if (m < 10) throw value_error("totient_lower_bound_check: requires m >= 10");
    const double lhs = static_cast<double>(totient_int(m)) / static_cast<double>(m);
    const double pi = 3.14159265358979323846;
    const double rhs = (3.0 / (std::exp(kEulerGamma) * pi * pi)) / std::log(std::log(static_cast<double>(m)));
    return {lhs >= rhs, lhs, rhs, lhs - rhs};
}

// f(n, x) = (1 - 1/x)^n - 1 / (5 log5 * n log x), on integer n in [2, x-1], x >= 3.
inline BoundReport normal_density_bound_check(double x, u64 n) {
    if (x < 3.0) throw value_error("normal_density_bound_check: requires x >= 3");
    if (n < 2 || static_cast<double>(n) > x - 1.0)
        throw value_error("normal_density_bound_check: requires 2 <= n <= x - 1");
    const double lhs = std::pow(1.0 - 1.0 / x, static_cast<double>(n));
    const double rhs = 1.0 / (5.0 * std::log(5.0) * static_cast<double>(n) * std::log(x));
    const double value = lhs - rhs;
    return {value > 0.0, lhs, rhs, value};
}

} // namespace salemfield

#endif
