#pragma once

#include <cstdint>

namespace burn {

// Exact integer square-root helpers. All bounds in this library are of the
// form ceil(sqrt(p / q)); evaluating them in integers keeps the certified
// bounds free of floating-point rounding at perfect squares.

/// Largest k with k*k*q <= p. Requires q > 0.
constexpr std::uint64_t floor_sqrt_ratio(std::uint64_t p, std::uint64_t q) {
    std::uint64_t lo = 0, hi = 1;
    while (hi * hi * q <= p) hi *= 2;
    // invariant: lo*lo*q <= p < hi*hi*q
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (mid * mid * q <= p) lo = mid; else hi = mid;
    }
    return lo;
}

/// Smallest k with k*k*q >= p. Requires q > 0.
constexpr std::uint64_t ceil_sqrt_ratio(std::uint64_t p, std::uint64_t q) {
    const std::uint64_t f = floor_sqrt_ratio(p, q);
    return f * f * q == p ? f : f + 1;
}

constexpr std::uint64_t floor_sqrt(std::uint64_t x) { return floor_sqrt_ratio(x, 1); }
constexpr std::uint64_t ceil_sqrt(std::uint64_t x) { return ceil_sqrt_ratio(x, 1); }

static_assert(ceil_sqrt(0) == 0);
static_assert(ceil_sqrt(9) == 3);
static_assert(ceil_sqrt(10) == 4);
static_assert(floor_sqrt(8) == 2);
static_assert(ceil_sqrt_ratio(216, 3) == 9);

} // namespace burn
