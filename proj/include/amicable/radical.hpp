#pragma once

/// @file radical.hpp
/// @brief Sums of square roots of positive integers and their rationality.
///
/// A lattice polygon's perimeter is a sum of terms sqrt(a_i) with a_i the
/// squared edge lengths. Such a sum is rational exactly when every a_i is a
/// perfect square; radical_sum_is_rational() uses that characterization. For two and
/// three terms an independent route is provided that decides rationality by
/// squaring and conjugation only, and the two routes are cross-checked.

#include "amicable/integer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace amicable::lattice {

class RadicalSum {
public:
    explicit RadicalSum(std::vector<integer> radicands) : radicands_(std::move(radicands)) {
        if (radicands_.empty()) throw std::invalid_argument("radical sum needs at least one term");
        for (integer r : radicands_)
            if (r <= 0) throw std::invalid_argument("radicand must be positive");
        std::sort(radicands_.begin(), radicands_.end());
    }

    RadicalSum(std::initializer_list<integer> radicands)
        : RadicalSum(std::vector<integer>(radicands)) {}

    /// Sorted ascending; the sum is a multiset.
    std::span<const integer> radicands() const { return radicands_; }
    std::size_t size() const { return radicands_.size(); }

    /// Floating-point value, for diagnostics only.
    long double approximate() const {
        long double v = 0;
        for (integer r : radicands_) v += std::sqrt(static_cast<long double>(r));
        return v;
    }

    friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

private:
    std::vector<integer> radicands_;
};

/// Integer value of the sum when every radicand is a perfect square.
inline std::optional<integer> integer_value(const RadicalSum& r) {
    integer total = 0;
    for (integer a : r.radicands()) {
        integer root = isqrt(a);
        if (root * root != a) return std::nullopt;
        total = checked_add(total, root);
    }
    return total;
}

/// Roots recovered by the conjugate argument for sqrt(x) + sqrt(y).
struct TwoRadicalWitness {
    integer sum;
    integer root_x;
    integer root_y;
};

/// Decides whether sqrt(x) + sqrt(y) is rational without testing x or y for
/// squareness directly.
///
/// s^2 = x + y + 2 sqrt(xy) must be rational, so xy is a square and s^2 is
/// an integer t; s is then rational iff t is a square. Given s, the
/// conjugate sqrt(x) - sqrt(y) = (x - y) / s yields each root.
inline std::optional<TwoRadicalWitness> two_radical_witness(integer x, integer y) {
    if (x <= 0 || y <= 0) throw std::invalid_argument("radicand must be positive");
    integer xy = checked_mul(x, y);
    integer cross = isqrt(xy);
    if (cross * cross != xy) return std::nullopt;
    integer t = checked_add(checked_add(x, y), checked_mul(2, cross));
    integer s = isqrt(t);
    if (s * s != t) return std::nullopt;

    // sqrt(x) = (s + (x - y)/s) / 2 = (t + x - y) / (2s), a rational root of
    // an integer and therefore an integer.
    integer num_x = checked_sub(checked_add(t, x), y);
    integer num_y = checked_sub(checked_add(t, y), x);
    integer den = checked_mul(2, s);
    if (num_x % den != 0 || num_y % den != 0)
        throw std::logic_error("two-radical conjugate produced a non-integer root");
    TwoRadicalWitness w{s, num_x / den, num_y / den};
    if (w.root_x * w.root_x != x || w.root_y * w.root_y != y)
        throw std::logic_error("two-radical conjugate roots do not square back");
    return w;
}

/// Decides whether d = sqrt(a) + sqrt(b) + sqrt(c) is rational by the
/// squaring identity sqrt(ab) + d sqrt(c) = (d^2 + c - a - b) / 2.
///
/// A rational d is an integer (the identity makes d sqrt(c) an integer, hence
/// sqrt(c) and then sqrt(a) + sqrt(b) are integers), and it lies within
/// [floor sum, floor sum + 2], so only three candidates are examined. Each
/// candidate is accepted only if the identity holds through the two-radical
/// route and the leftover pair sums back to d.
inline std::optional<integer> three_radical_value(integer a, integer b, integer c) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("radicand must be positive");
    const integer floor_sum = checked_add(checked_add(isqrt(a), isqrt(b)), isqrt(c));
    for (integer d = floor_sum; d <= floor_sum + 2; ++d) {
        integer twice_m = checked_sub(checked_sub(checked_add(checked_square(d), c), a), b);
        if (twice_m < 0 || twice_m % 2 != 0) continue;
        integer m = twice_m / 2;

        auto identity = two_radical_witness(checked_mul(a, b), checked_mul(checked_square(d), c));
        if (!identity || identity->sum != m) continue;

        // d sqrt(c) is the integer root_y; sqrt(c) = root_y / d.
        if (identity->root_y % d != 0) continue;
        integer root_c = identity->root_y / d;
        if (root_c * root_c != c) continue;

        auto rest = two_radical_witness(a, b);
        if (rest && checked_add(rest->sum, root_c) == d) return d;
    }
    return std::nullopt;
}

/// Whether the represented sum is rational. For two or three terms the
/// elementary route is evaluated too and must agree.
inline bool radical_sum_is_rational(const RadicalSum& r) {
    const bool verdict = integer_value(r).has_value();
    auto t = r.radicands();
    std::optional<bool> elementary;
    if (t.size() == 2) elementary = two_radical_witness(t[0], t[1]).has_value();
    if (t.size() == 3) elementary = three_radical_value(t[0], t[1], t[2]).has_value();
    if (elementary && *elementary != verdict)
        throw std::logic_error("radical rationality routes disagree");
    return verdict;
}

} // namespace amicable::lattice
