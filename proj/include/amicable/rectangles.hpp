#pragma once

/// @file rectangles.hpp
/// @brief Amicable and equable rectangles with integer sides.
///
/// A pair of rectangles a x b and x x y is amicable when
///   ab = 2(x + y)  and  2(a + b) = xy
/// and the two rectangles differ. For fixed a and x this is a linear system
/// in b and y with determinant ax - 4; solve_partner() applies Cramer's rule
/// and enumerate_by_divisors() walks the finite set of (a, x) that can give
/// integer solutions. brute_force_pairs() is the exhaustive cross-check.

#include "amicable/integer.hpp"
#include "amicable/search.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace amicable::rect {

/// Canonical side record, short_side <= long_side.
class RectSides {
public:
    RectSides(integer a, integer b) {
        if (a <= 0 || b <= 0) throw std::invalid_argument("rectangle sides must be positive");
        short_ = std::min(a, b);
        long_ = std::max(a, b);
    }

    integer short_side() const { return short_; }
    integer long_side() const { return long_; }
    integer area() const { return checked_mul(short_, long_); }
    integer perimeter() const { return checked_mul(2, checked_add(short_, long_)); }

    friend auto operator<=>(const RectSides&, const RectSides&) = default;

private:
    integer short_;
    integer long_;
};

inline search::ShapeFingerprint fingerprint(const RectSides& r) {
    return search::make_fingerprint("rect", {r.short_side(), r.long_side()}, r.area(), r.perimeter());
}

inline bool cross_equal(const RectSides& r, const RectSides& s) {
    return r.area() == s.perimeter() && s.area() == r.perimeter();
}

/// Unordered amicable pair; first <= second. The cross equalities are
/// re-checked on construction and a failing pair cannot be built.
class RectAmicablePair {
public:
    RectAmicablePair(const RectSides& r, const RectSides& s)
        : first_(std::min(r, s)), second_(std::max(r, s)) {
        if (first_ == second_) throw certificate_error("a rectangle cannot be amicable with itself");
        if (!cross_equal(first_, second_)) throw certificate_error("rectangle pair fails cross equalities");
    }

    const RectSides& first() const { return first_; }
    const RectSides& second() const { return second_; }

    friend auto operator<=>(const RectAmicablePair&, const RectAmicablePair&) = default;

private:
    RectSides first_;
    RectSides second_;
};

/// area <= perimeter, i.e. ab <= 2(a + b).
inline bool perimeter_dominant(const RectSides& r) { return r.area() <= r.perimeter(); }

inline bool is_equable(const RectSides& r) { return r.area() == r.perimeter(); }

/// Rectangles (x, y) other than r itself with xy = perimeter(r) and
/// 2(x + y) = area(r). Found by scanning divisors of the perimeter.
inline std::vector<RectSides> amicable_partners(const RectSides& r) {
    std::vector<RectSides> out;
    if (r.area() % 2 != 0) return out;
    const integer half_area = r.area() / 2;
    const integer perim = r.perimeter();
    for (integer x : divisors(perim)) {
        integer y = perim / x;
        if (x > y) break;
        if (x + y != half_area) continue;
        RectSides partner(x, y);
        if (partner != r) out.push_back(partner);
    }
    return out;
}

/// Short sides of perimeter-dominant rectangles (long side <= max_side) that
/// can belong to an amicable pair with a different rectangle. Odd areas are
/// dropped first: the partner's perimeter 2(x + y) is even.
inline std::vector<integer> small_side_candidates(integer max_side) {
    if (max_side < 4) throw std::invalid_argument("small_side_candidates: max_side must be at least 4");
    std::set<integer> shorts;
    for (integer a = 1; a <= max_side; ++a) {
        for (integer b = a; b <= max_side; ++b) {
            RectSides r(a, b);
            if (!perimeter_dominant(r)) break; // ab - 2a - 2b grows with b once a > 2
            if (r.area() % 2 != 0) continue;
            if (amicable_partners(r).empty()) continue;
            shorts.insert(a);
        }
    }
    return {shorts.begin(), shorts.end()};
}

/// Why the linear system for (b, y) produced no admissible rectangle.
enum class NoSolution { singular, non_integer, non_positive };

inline const char* to_string(NoSolution reason) {
    switch (reason) {
    case NoSolution::singular: return "singular";
    case NoSolution::non_integer: return "non-integer";
    case NoSolution::non_positive: return "non-positive";
    }
    return "unknown";
}

struct Partner {
    integer b;
    integer y;

    friend auto operator<=>(const Partner&, const Partner&) = default;
};

struct PartnerOutcome {
    std::optional<Partner> partner;
    NoSolution reason = NoSolution::singular; // meaningful only when partner is empty
};

/// Solves ab = 2(x + y), 2(a + b) = xy for b and y:
///   [ a  -2 ] [b]   [2x]
///   [-2   x ] [y] = [2a]
/// det = ax - 4, b = (2x^2 + 4a) / det, y = (2a^2 + 4x) / det.
inline PartnerOutcome solve_partner(integer a, integer x) {
    if (a <= 0 || x <= 0) throw std::invalid_argument("solve_partner: a and x must be positive");
    const integer det = checked_sub(checked_mul(a, x), 4);
    if (det == 0) return {std::nullopt, NoSolution::singular};

    const integer b_num = checked_add(checked_mul(2, checked_square(x)), checked_mul(4, a));
    const integer y_num = checked_add(checked_mul(2, checked_square(a)), checked_mul(4, x));
    // Both numerators are positive, so a negative determinant gives b, y < 0.
    if (det < 0) return {std::nullopt, NoSolution::non_positive};
    if (b_num % det != 0 || y_num % det != 0) return {std::nullopt, NoSolution::non_integer};

    Partner p{b_num / det, y_num / det};
    if (p.b <= 0 || p.y <= 0) return {std::nullopt, NoSolution::non_positive};
    if (checked_mul(a, p.b) != checked_mul(2, checked_add(x, p.y)) ||
        checked_mul(2, checked_add(a, p.b)) != checked_mul(x, p.y))
        throw certificate_error("closed-form partner fails re-verification");
    return {p, {}};
}

inline std::optional<Partner> partner_closed_form(integer a, integer x) {
    return solve_partner(a, x).partner;
}

/// One row of a divisor branch: the chosen x and the solved (b, y).
struct BranchRow {
    integer x;
    integer y;
    integer b;
};

/// Raw rows for short side a in {1, 2}, one per divisor, before deduplication.
///
/// a = 1: y = (4x + 2)/(x - 4) = 4 + 18/c with c = x - 4, so c | 18.
/// a = 2: y = (2x + 4)/(x - 2) = 2 + 8/(x - 2), so (x - 2) | 8.
inline std::vector<BranchRow> divisor_branch(integer a) {
    integer modulus = 0, shift = 0;
    if (a == 1) { modulus = 18; shift = 4; }
    else if (a == 2) { modulus = 8; shift = 2; }
    else throw std::invalid_argument("divisor_branch: short side must be 1 or 2");

    std::vector<BranchRow> rows;
    for (integer c : divisors(modulus)) {
        const integer x = c + shift;
        auto p = partner_closed_form(a, x);
        if (!p) throw certificate_error("divisor branch produced no integer partner");
        rows.push_back({x, p->y, p->b});
    }
    return rows;
}

inline std::vector<RectAmicablePair> enumerate_by_divisors() {
    std::set<RectAmicablePair> pairs;
    for (integer a : {1, 2})
        for (const BranchRow& row : divisor_branch(a))
            pairs.insert(RectAmicablePair(RectSides(a, row.b), RectSides(row.x, row.y)));
    return {pairs.begin(), pairs.end()};
}

/// Every pair of distinct canonical rectangles with all sides <= max_side
/// that satisfies both cross equalities, by exhaustive comparison. The scan
/// over first rectangles is split across `workers` threads; output is sorted.
inline std::vector<RectAmicablePair> brute_force_pairs(integer max_side, unsigned workers = 1) {
    if (max_side < 1) throw std::invalid_argument("brute_force_pairs: max_side must be positive");
    std::vector<RectSides> shapes;
    for (integer a = 1; a <= max_side; ++a)
        for (integer b = a; b <= max_side; ++b) shapes.emplace_back(a, b);

    auto scan = [&](std::size_t begin, std::size_t stride, std::vector<RectAmicablePair>& out) {
        for (std::size_t i = begin; i < shapes.size(); i += stride)
            for (std::size_t j = i + 1; j < shapes.size(); ++j)
                if (cross_equal(shapes[i], shapes[j])) out.emplace_back(shapes[i], shapes[j]);
    };

    workers = std::max(1u, workers);
    std::vector<std::vector<RectAmicablePair>> partial(workers);
    if (workers == 1) {
        scan(0, 1, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { scan(w, workers, partial[w]); });
    }
    std::set<RectAmicablePair> merged;
    for (auto& part : partial) merged.insert(part.begin(), part.end());
    return {merged.begin(), merged.end()};
}

/// Rectangles with area = perimeter and sides <= max_side, sorted.
inline std::vector<RectSides> equable_rectangles(integer max_side) {
    if (max_side < 1) throw std::invalid_argument("equable_rectangles: max_side must be positive");
    std::vector<RectSides> out;
    for (integer a = 1; a <= max_side; ++a)
        for (integer b = a; b <= max_side; ++b)
            if (is_equable(RectSides(a, b))) out.emplace_back(a, b);
    return out;
}

} // namespace amicable::rect
