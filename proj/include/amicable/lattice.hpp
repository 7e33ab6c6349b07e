#pragma once

/// @file lattice.hpp
/// @brief Exact geometry of polygons with vertices on the integer lattice.
///
/// Areas are carried as twice-area integers (the shoelace sum is always an
/// integer for lattice vertices) and halved only when serialized.

#include "amicable/integer.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace amicable::lattice {

struct LatticePoint {
    integer x = 0;
    integer y = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline integer squared_distance(LatticePoint p, LatticePoint q) {
    integer dx = checked_sub(q.x, p.x);
    integer dy = checked_sub(q.y, p.y);
    return checked_add(checked_square(dx), checked_square(dy));
}

/// The eight linear symmetries of Z^2 (rotations by multiples of 90 degrees
/// and reflections), indexed 0..7. Index 0 is the identity.
inline LatticePoint apply_symmetry(int index, LatticePoint p) {
    integer x = p.x, y = p.y;
    if (index & 4) std::swap(x, y);
    if (index & 1) x = -x;
    if (index & 2) y = -y;
    return {x, y};
}

inline constexpr int symmetry_count = 8;

/// Ordered vertex list of a lattice polygon.
///
/// Construction enforces at least three vertices and distinct consecutive
/// vertices (including last -> first). Simplicity is checked exactly only
/// for triangles and axis-aligned rectangles (see is_simple()); for other
/// polygons it is a caller obligation.
class LatticePolygon {
public:
    explicit LatticePolygon(std::vector<LatticePoint> vertices)
        : vertices_(std::move(vertices)) {
        if (vertices_.size() < 3)
            throw std::invalid_argument("lattice polygon needs at least 3 vertices");
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i] == vertices_[(i + 1) % vertices_.size()])
                throw std::invalid_argument("lattice polygon has repeated consecutive vertex");
        }
    }

    LatticePolygon(std::initializer_list<LatticePoint> vertices)
        : LatticePolygon(std::vector<LatticePoint>(vertices)) {}

    std::span<const LatticePoint> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    LatticePoint vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    bool is_triangle() const { return vertices_.size() == 3; }

    bool is_axis_aligned_rectangle() const {
        if (vertices_.size() != 4) return false;
        for (std::size_t i = 0; i < 4; ++i) {
            LatticePoint p = vertex(i), q = vertex(i + 1), r = vertex(i + 2);
            bool horizontal = p.y == q.y;
            if (horizontal == (p.x == q.x)) return false;
            if (horizontal == (q.y == r.y)) return false;
        }
        // Alternating horizontal/vertical edges closing as a parallelogram.
        return vertex(0).x + vertex(2).x == vertex(1).x + vertex(3).x &&
               vertex(0).y + vertex(2).y == vertex(1).y + vertex(3).y;
    }

    /// Exact for triangles (non-collinear). Axis-aligned rectangles are
    /// simple by construction; any other polygon is assumed simple.
    bool is_simple() const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

private:
    std::vector<LatticePoint> vertices_;
};

/// Twice the enclosed area, orientation-independent (shoelace formula).
inline integer twice_area(const LatticePolygon& poly) {
    // Shift to the first vertex to keep intermediate products small.
    const LatticePoint origin = poly.vertex(0);
    integer sum = 0;
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        LatticePoint p = poly.vertex(i), q = poly.vertex(i + 1);
        integer px = checked_sub(p.x, origin.x), py = checked_sub(p.y, origin.y);
        integer qx = checked_sub(q.x, origin.x), qy = checked_sub(q.y, origin.y);
        sum = checked_add(sum, checked_sub(checked_mul(px, qy), checked_mul(py, qx)));
    }
    return checked_abs(sum);
}

inline bool LatticePolygon::is_simple() const {
    if (is_triangle()) return twice_area(*this) != 0;
    return true;
}

namespace detail {

inline void require_nondegenerate(const LatticePolygon& poly, const char* what) {
    if (twice_area(poly) == 0)
        throw std::invalid_argument(std::string(what) + ": degenerate polygon (zero area)");
}

} // namespace detail

/// Number of lattice points on the boundary: sum of gcd(|dx|, |dy|) over edges.
inline integer boundary_point_count(const LatticePolygon& poly) {
    detail::require_nondegenerate(poly, "boundary_point_count");
    integer total = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        LatticePoint p = poly.vertex(i), q = poly.vertex(i + 1);
        total = checked_add(total, gcd(checked_sub(q.x, p.x), checked_sub(q.y, p.y)));
    }
    return total;
}

/// Number of strictly interior lattice points, from Pick's theorem
/// 2A = 2I + B - 2.
inline integer interior_point_count(const LatticePolygon& poly) {
    detail::require_nondegenerate(poly, "interior_point_count");
    integer doubled = checked_add(checked_sub(twice_area(poly), boundary_point_count(poly)), 2);
    return doubled / 2;
}

/// Squared length of each edge, edge i running from vertex i to vertex i+1.
inline std::vector<integer> squared_side_lengths(const LatticePolygon& poly) {
    std::vector<integer> out;
    out.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
        out.push_back(squared_distance(poly.vertex(i), poly.vertex(i + 1)));
    return out;
}

/// Integer edge lengths in edge order, or nullopt when some edge is irrational.
inline std::optional<std::vector<integer>> integer_side_lengths(const LatticePolygon& poly) {
    std::vector<integer> out;
    for (integer sq : squared_side_lengths(poly)) {
        integer r = isqrt(sq);
        if (r * r != sq) return std::nullopt;
        out.push_back(r);
    }
    return out;
}

/// Apply one of the eight lattice symmetries followed by a translation.
inline LatticePolygon transform(const LatticePolygon& poly, int symmetry, LatticePoint shift) {
    std::vector<LatticePoint> out;
    out.reserve(poly.size());
    for (LatticePoint p : poly.vertices()) {
        LatticePoint s = apply_symmetry(symmetry, p);
        out.push_back({checked_add(s.x, shift.x), checked_add(s.y, shift.y)});
    }
    return LatticePolygon(std::move(out));
}

/// True when some vertex relabelling, lattice symmetry and translation maps
/// triangle `t` onto triangle `u` vertex-for-vertex as sets.
inline bool lattice_congruent_triangles(const LatticePolygon& t, const LatticePolygon& u) {
    if (!t.is_triangle() || !u.is_triangle()) return false;
    std::array<LatticePoint, 3> target{u.vertex(0), u.vertex(1), u.vertex(2)};
    std::sort(target.begin(), target.end());
    for (int s = 0; s < symmetry_count; ++s) {
        std::array<LatticePoint, 3> img;
        for (std::size_t i = 0; i < 3; ++i) img[i] = apply_symmetry(s, t.vertex(i));
        std::sort(img.begin(), img.end());
        // After sorting, the translation must carry the smallest onto the smallest.
        integer dx = checked_sub(target[0].x, img[0].x);
        integer dy = checked_sub(target[0].y, img[0].y);
        bool match = true;
        for (std::size_t i = 0; i < 3 && match; ++i)
            match = img[i].x + dx == target[i].x && img[i].y + dy == target[i].y;
        if (match) return true;
    }
    return false;
}

} // namespace amicable::lattice
