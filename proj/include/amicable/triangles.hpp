#pragma once

/// @file triangles.hpp
/// @brief Heronian triangles, their amicable pairs, equable members and
/// explicit lattice placements.
///
/// An amicable lattice triangle has integer sides (its perimeter is a
/// rational sum of square roots) and integer area (it equals the partner's
/// perimeter), so searching heronian triangles is sufficient.

#include "amicable/integer.hpp"
#include "amicable/lattice.hpp"
#include "amicable/search.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace amicable::tri {

using lattice::LatticePoint;
using lattice::LatticePolygon;

/// Canonical side triple a <= b <= c with a + b > c.
class TriangleSides {
public:
    TriangleSides(integer a, integer b, integer c) {
        std::array<integer, 3> s{a, b, c};
        std::sort(s.begin(), s.end());
        if (s[0] <= 0) throw std::invalid_argument("triangle sides must be positive");
        if (checked_add(s[0], s[1]) <= s[2]) throw std::invalid_argument("triangle inequality violated");
        a_ = s[0];
        b_ = s[1];
        c_ = s[2];
    }

    integer a() const { return a_; }
    integer b() const { return b_; }
    integer c() const { return c_; }
    std::vector<integer> as_vector() const { return {a_, b_, c_}; }

    integer perimeter() const { return checked_add(checked_add(a_, b_), c_); }

    /// 16 * Area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c), positive for valid triples.
    integer sixteen_area_sq() const {
        integer v = perimeter();
        v = checked_mul(v, b_ + c_ - a_);
        v = checked_mul(v, a_ - b_ + c_);
        return checked_mul(v, a_ + b_ - c_);
    }

    friend auto operator<=>(const TriangleSides&, const TriangleSides&) = default;

private:
    integer a_, b_, c_;
};

inline integer sixteen_area_sq(const TriangleSides& t) { return t.sixteen_area_sq(); }

struct HeronianTriangle {
    TriangleSides sides;
    integer area;

    integer perimeter() const { return sides.perimeter(); }

    friend auto operator<=>(const HeronianTriangle&, const HeronianTriangle&) = default;
};

/// Present iff 16A^2 is a perfect square divisible by 16, i.e. A is an integer.
inline std::optional<HeronianTriangle> as_heronian(const TriangleSides& t) {
    const integer v = t.sixteen_area_sq();
    const integer root = isqrt(v);
    if (root * root != v || root % 4 != 0) return std::nullopt;
    HeronianTriangle h{t, root / 4};
    if (checked_mul(16, checked_square(h.area)) != v) throw certificate_error("heronian area fails Heron check");
    return h;
}

/// Sort key: (perimeter, a, b, c).
inline bool perimeter_order(const HeronianTriangle& x, const HeronianTriangle& y) {
    return std::tuple(x.perimeter(), x.sides) < std::tuple(y.perimeter(), y.sides);
}

/// All heronian triangles with perimeter <= max_perimeter. The longest side
/// c satisfies c < P/2; values of c are dealt round-robin to `workers`.
inline std::vector<HeronianTriangle> enumerate_heronian(integer max_perimeter, unsigned workers = 1) {
    if (max_perimeter < 3) throw std::invalid_argument("enumerate_heronian: max_perimeter must be at least 3");

    auto scan = [max_perimeter](integer first_c, integer stride, std::vector<HeronianTriangle>& out) {
        for (integer c = first_c; 2 * c < max_perimeter; c += stride) {
            for (integer b = (c + 1) / 2; b <= c; ++b) {
                for (integer a = std::max<integer>(c - b + 1, 1); a <= b && a + b + c <= max_perimeter; ++a) {
                    if (auto h = as_heronian(TriangleSides(a, b, c))) out.push_back(*h);
                }
            }
        }
    };

    workers = std::max(1u, workers);
    std::vector<std::vector<HeronianTriangle>> partial(workers);
    if (workers == 1) {
        scan(1, 1, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { scan(1 + w, workers, partial[w]); });
    }
    std::vector<HeronianTriangle> all;
    for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), perimeter_order);
    return all;
}

inline search::ShapeFingerprint fingerprint(const HeronianTriangle& t) {
    return search::make_fingerprint("tri", t.sides.as_vector(), t.area, t.perimeter());
}

struct TrianglePair {
    HeronianTriangle first;
    HeronianTriangle second;

    friend auto operator<=>(const TrianglePair&, const TrianglePair&) = default;
};

inline bool cross_equal(const HeronianTriangle& s, const HeronianTriangle& t) {
    return s.area == t.perimeter() && t.area == s.perimeter();
}

/// Amicable pairs among heronian triangles with perimeter <= max_perimeter,
/// via the fingerprint join. Each pair is re-checked on the triangle records.
inline std::vector<TrianglePair> find_amicable_triangle_pairs(integer max_perimeter) {
    const auto triangles = enumerate_heronian(max_perimeter);
    std::vector<search::ShapeFingerprint> prints;
    std::map<std::string, HeronianTriangle> by_id;
    for (const auto& t : triangles) {
        prints.push_back(fingerprint(t));
        by_id.emplace(prints.back().shape_id(), t);
    }

    std::vector<TrianglePair> out;
    for (const auto& m : search::match_amicable(prints)) {
        TrianglePair p{by_id.at(m.first.shape_id()), by_id.at(m.second.shape_id())};
        if (p.first.sides == p.second.sides || !cross_equal(p.first, p.second))
            throw certificate_error("triangle pair fails cross equalities");
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Heronian triangles with area == perimeter, in perimeter order.
inline std::vector<HeronianTriangle> find_equable_triangles(integer max_perimeter) {
    std::vector<HeronianTriangle> out;
    for (const auto& t : enumerate_heronian(max_perimeter))
        if (t.area == t.perimeter()) out.push_back(t);
    return out;
}

/// All (p, q) with p, q >= 0 and p^2 + q^2 = n, sorted by p.
inline std::vector<LatticePoint> sum_two_squares_reps(integer n) {
    if (n < 0) throw std::invalid_argument("sum_two_squares_reps: n must be non-negative");
    std::vector<LatticePoint> out;
    for (integer p = 0; p * p <= n; ++p) {
        integer rest = n - p * p;
        integer q = isqrt(rest);
        if (q * q == rest) out.push_back({p, q});
    }
    return out;
}

/// Lattice vectors of squared length n: the representations completed by sign.
inline std::vector<LatticePoint> lattice_vectors_of_norm(integer n) {
    std::vector<LatticePoint> out;
    for (LatticePoint r : sum_two_squares_reps(n))
        for (integer sx : {1, -1})
            for (integer sy : {1, -1})
                out.push_back({sx * r.x, sy * r.y});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct TriangleEmbedding {
    LatticePoint v0;
    LatticePoint v1;
    LatticePoint v2;

    LatticePolygon polygon() const { return LatticePolygon{v0, v1, v2}; }

    friend auto operator<=>(const TriangleEmbedding&, const TriangleEmbedding&) = default;
};

/// Places a heronian triangle on the lattice with v0 at the origin, v1 at the
/// far end of the longest side c and v2 at the far end of side b, so that
/// |v1 - v2| = a.
///
/// The candidate set is closed under the eight lattice symmetries; the
/// canonical representative is the one with the lexicographically largest
/// (v1.x, v1.y, v2.x, v2.y), which keeps coordinates non-negative for the
/// common cases. Returns nullopt only if no placement exists, which would
/// contradict the fact that heronian triangles are lattice triangles.
inline std::optional<TriangleEmbedding> embed_triangle(const HeronianTriangle& t) {
    const integer aa = checked_square(t.sides.a());
    const integer bb = checked_square(t.sides.b());
    const integer cc = checked_square(t.sides.c());

    std::optional<TriangleEmbedding> best;
    const auto far_c = lattice_vectors_of_norm(cc);
    const auto far_b = lattice_vectors_of_norm(bb);
    for (LatticePoint p : far_c) {
        for (LatticePoint q : far_b) {
            if (lattice::squared_distance(p, q) != aa) continue;
            TriangleEmbedding e{{0, 0}, p, q};
            if (!best || *best < e) best = e;
        }
    }
    if (!best) return std::nullopt;

    const LatticePolygon poly = best->polygon();
    auto squared = lattice::squared_side_lengths(poly);
    std::sort(squared.begin(), squared.end());
    if (squared != std::vector<integer>{aa, bb, cc} || lattice::twice_area(poly) != checked_mul(2, t.area))
        throw certificate_error("triangle embedding fails its certificate");
    return best;
}

} // namespace amicable::tri
