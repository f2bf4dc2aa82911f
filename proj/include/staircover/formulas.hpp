#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "extnat.hpp"

namespace staircover {

namespace detail {

// Floor square root: float guess fixed up by exact integer comparisons.
inline std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw precondition_error("isqrt of a negative value");
    if (x < 2) return x;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// All closed forms below stay within 64 bits for arguments up to 10^9.
inline void require_natural(std::int64_t v, const char* what) {
    if (v < 0) throw precondition_error(std::string(what) + " must be a natural number");
    if (v > 1'000'000'000)
        throw precondition_error(std::string(what) + " exceeds the supported range (10^9)");
}

} // namespace detail

// Maximal coverable width with `inc` increasing and `dec` decreasing tiles at
// height n; unbounded when inc + dec == n, where horizontal strips reach any
// width. Undefined for inc + dec > n.
inline ExtNat max_width_split(std::int64_t n, std::int64_t inc, std::int64_t dec) {
    detail::require_natural(n, "n");
    detail::require_natural(inc, "inc");
    detail::require_natural(dec, "dec");
    if (inc + dec > n) throw domain_error("class counts exceed the height");
    if (inc + dec == n) return ExtNat::unbounded();
    return {inc + dec + inc * dec / (n - inc - dec)};
}

// The same quantity parametrized by the height excess e = n - (inc + dec).
inline ExtNat max_width_excess(std::int64_t excess, std::int64_t inc, std::int64_t dec) {
    detail::require_natural(excess, "excess");
    return max_width_split(excess + inc + dec, inc, dec);
}

// Maximal coverable width with p tiles at height n; unbounded for p >= n.
// Computed through the closed form and, as a permanently running check,
// through the balanced split, which must agree for every input.
inline ExtNat max_width(std::int64_t n, std::int64_t p) {
    detail::require_natural(n, "n");
    detail::require_natural(p, "p");
    if (p >= n) return ExtNat::unbounded();
    const std::int64_t closed = p + p * p / (4 * (n - p));
    const ExtNat balanced = max_width_split(n, (p + 1) / 2, p / 2);
    if (balanced != ExtNat(closed))
        throw std::logic_error("closed form and balanced split disagree for n = " +
                               std::to_string(n) + ", p = " + std::to_string(p));
    return {closed};
}

// Minimum number of monotone tiles covering an m x n rectangle: the smallest
// p with 3p^2 - 4(m+n)p + 4mn <= 0, found in exact integer arithmetic. The
// float square root only seeds the scan. Always at most min(m, n).
inline std::int64_t min_cover_count(std::int64_t m, std::int64_t n) {
    detail::require_natural(m, "m");
    detail::require_natural(n, "n");
    if (m == 0 || n == 0) return 0;
    const auto q = [m, n](std::int64_t p) { return 3 * p * p - 4 * (m + n) * p + 4 * m * n; };
    const std::int64_t root = detail::isqrt(m * m + n * n - m * n);
    std::int64_t p = std::max<std::int64_t>(0, 2 * (m + n - root) / 3 - 2);
    while (q(p) > 0) ++p;
    return p;
}

// True iff the covering by n horizontal strips is already of minimal
// cardinality; requires m >= n >= 1.
inline bool trivial_is_minimal(std::int64_t m, std::int64_t n) {
    if (n < 1 || m < n) throw precondition_error("trivial_is_minimal requires m >= n >= 1");
    return 4 * (m + 1) > (n + 1) * (n + 1);
}

// Upper bound on any coverable width from cell counting: one tile has at most
// m + n - 1 cells. Used to cap the exact searches; requires inc + dec < n.
inline std::int64_t counting_width_bound(std::int64_t n, std::int64_t inc, std::int64_t dec) {
    detail::require_natural(n, "n");
    detail::require_natural(inc, "inc");
    detail::require_natural(dec, "dec");
    if (inc + dec >= n) throw domain_error("counting bound defined only for inc + dec < n");
    return (inc + dec) * (n - 1) / (n - inc - dec);
}

// Minimum number of tiles when only one monotony direction is allowed: the
// cells on an anti-diagonal need one tile each.
inline std::int64_t increasing_only_min(std::int64_t m, std::int64_t n) {
    detail::require_natural(m, "m");
    detail::require_natural(n, "n");
    return std::min(m, n);
}

} // namespace staircover
