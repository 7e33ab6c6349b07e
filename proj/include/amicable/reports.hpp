#pragma once

/// @file reports.hpp
/// @brief Builds certified SearchReports for each shape family.

#include "amicable/rectangles.hpp"
#include "amicable/search.hpp"
#include "amicable/triangles.hpp"

#include <chrono>
#include <set>
#include <string>
#include <vector>

namespace amicable {

using rect::fingerprint;
using tri::fingerprint;

/// Recomputes area and perimeter from the sides and compares them with the
/// values carried by the fingerprint.
inline bool intrinsic_consistent(const search::ShapeFingerprint& s) {
    try {
        if (s.kind == "rect") {
            if (s.sides.size() != 2) return false;
            const rect::RectSides r(s.sides[0], s.sides[1]);
            return r.short_side() == s.sides[0] && r.area() == s.area && r.perimeter() == s.perimeter;
        }
        if (s.kind == "tri") {
            if (s.sides.size() != 3) return false;
            const tri::TriangleSides t(s.sides[0], s.sides[1], s.sides[2]);
            if (t.as_vector() != s.sides) return false;
            auto h = tri::as_heronian(t);
            return h && h->area == s.area && h->perimeter() == s.perimeter;
        }
    } catch (const std::invalid_argument&) {
        return false;
    }
    return false;
}

namespace detail {

using clock = std::chrono::steady_clock;

inline std::chrono::nanoseconds since(clock::time_point start) { return clock::now() - start; }

inline std::vector<search::AmicableMatch> to_matches(const std::vector<rect::RectAmicablePair>& pairs) {
    std::vector<search::AmicableMatch> out;
    for (const auto& p : pairs) out.push_back(search::make_match(fingerprint(p.first()), fingerprint(p.second())));
    return out;
}

} // namespace detail

/// Divisor enumeration; the scanned set is the shapes occurring in the pairs.
inline search::SearchReport rect_divisor_report() {
    const auto start = detail::clock::now();
    const auto pairs = rect::enumerate_by_divisors();
    std::set<search::ShapeFingerprint> shapes;
    for (const auto& p : pairs) {
        shapes.insert(fingerprint(p.first()));
        shapes.insert(fingerprint(p.second()));
    }
    std::vector<search::ShapeFingerprint> scanned(shapes.begin(), shapes.end());
    return search::assemble_report(search::Family::rectangles, std::nullopt, scanned, detail::to_matches(pairs),
                                   detail::since(start));
}

/// Exhaustive scan over all canonical rectangles with sides <= max_side,
/// matched through the fingerprint join.
inline search::SearchReport rect_oracle_report(integer max_side) {
    const auto start = detail::clock::now();
    std::vector<search::ShapeFingerprint> shapes;
    for (integer a = 1; a <= max_side; ++a)
        for (integer b = a; b <= max_side; ++b) shapes.push_back(fingerprint(rect::RectSides(a, b)));
    auto matches = search::match_amicable(shapes);
    return search::assemble_report(search::Family::rectangles, max_side, shapes, std::move(matches),
                                   detail::since(start));
}

inline search::SearchReport tri_search_report(integer max_perimeter) {
    const auto start = detail::clock::now();
    std::vector<search::ShapeFingerprint> shapes;
    for (const auto& t : tri::enumerate_heronian(max_perimeter)) shapes.push_back(fingerprint(t));
    auto matches = search::match_amicable(shapes);
    return search::assemble_report(search::Family::triangles, max_perimeter, shapes, std::move(matches),
                                   detail::since(start));
}

inline search::SearchReport equable_rect_report(integer max_side) {
    const auto start = detail::clock::now();
    std::vector<search::ShapeFingerprint> shapes, members;
    for (integer a = 1; a <= max_side; ++a)
        for (integer b = a; b <= max_side; ++b) shapes.push_back(fingerprint(rect::RectSides(a, b)));
    for (const auto& r : rect::equable_rectangles(max_side)) members.push_back(fingerprint(r));
    return search::assemble_report(search::Family::equable_rectangles, max_side, shapes, {}, detail::since(start),
                                   std::move(members));
}

inline search::SearchReport equable_tri_report(integer max_perimeter) {
    const auto start = detail::clock::now();
    std::vector<search::ShapeFingerprint> shapes, members;
    for (const auto& t : tri::enumerate_heronian(max_perimeter)) {
        shapes.push_back(fingerprint(t));
        if (t.area == t.perimeter()) members.push_back(shapes.back());
    }
    return search::assemble_report(search::Family::equable_triangles, max_perimeter, shapes, {},
                                   detail::since(start), std::move(members));
}

/// Cross-family matching of rectangles (sides <= max_side) against heronian
/// triangles (perimeter <= max_perimeter). Nothing here is a proven
/// classification; the output is exploratory.
inline search::SearchReport mixed_report(integer max_side, integer max_perimeter) {
    const auto start = detail::clock::now();
    std::vector<search::ShapeFingerprint> shapes;
    for (integer a = 1; a <= max_side; ++a)
        for (integer b = a; b <= max_side; ++b) shapes.push_back(fingerprint(rect::RectSides(a, b)));
    for (const auto& t : tri::enumerate_heronian(max_perimeter)) shapes.push_back(fingerprint(t));
    std::vector<search::AmicableMatch> cross;
    for (auto& m : search::match_amicable(shapes))
        if (m.first.kind != m.second.kind) cross.push_back(std::move(m));
    return search::assemble_report(search::Family::mixed, std::nullopt, shapes, std::move(cross),
                                   detail::since(start));
}

} // namespace amicable
