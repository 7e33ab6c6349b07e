#pragma once

/// @file integer.hpp
/// @brief Overflow-checked 64-bit integer helpers shared by every module.
///
/// All lengths, squared lengths, areas and perimeters in this library are
/// exact integers. Arithmetic that would leave the int64 range throws
/// std::overflow_error instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amicable {

using integer = std::int64_t;

/// A computed result failed its independent re-verification.
class certificate_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void throw_overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

} // namespace detail

inline integer checked_add(integer a, integer b) {
    integer r;
    if (__builtin_add_overflow(a, b, &r)) detail::throw_overflow("addition");
    return r;
}

inline integer checked_sub(integer a, integer b) {
    integer r;
    if (__builtin_sub_overflow(a, b, &r)) detail::throw_overflow("subtraction");
    return r;
}

inline integer checked_mul(integer a, integer b) {
    integer r;
    if (__builtin_mul_overflow(a, b, &r)) detail::throw_overflow("multiplication");
    return r;
}

inline integer checked_abs(integer a) {
    if (a == INT64_MIN) detail::throw_overflow("absolute value");
    return a < 0 ? -a : a;
}

inline integer checked_square(integer a) { return checked_mul(a, a); }

/// Floor of the square root of n >= 0, by bisection on exact integers.
inline integer isqrt(integer n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    if (n < 2) return n;
    // 3037000499^2 is the largest square that fits in int64.
    integer lo = 1, hi = n < 3037000499 ? n : 3037000499;
    while (lo < hi) {
        integer mid = lo + (hi - lo + 1) / 2;
        if (mid <= n / mid) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

inline bool is_perfect_square(integer n) {
    if (n < 0) return false;
    integer r = isqrt(n);
    return r * r == n;
}

inline integer gcd(integer a, integer b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Positive divisors of n > 0 in increasing order.
inline std::vector<integer> divisors(integer n) {
    if (n <= 0) throw std::domain_error("divisors of a non-positive number");
    std::vector<integer> low, high;
    for (integer d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

} // namespace amicable
