#pragma once

/// @file search.hpp
/// @brief Shape-agnostic amicability matching and report assembly.
///
/// Shapes enter as fingerprints (area, perimeter, canonical id). Two shapes
/// s, t are amicable when s.area == t.perimeter and t.area == s.perimeter;
/// match_amicable() finds all such pairs by joining the (area, perimeter)
/// key against the reversed key, so a shape with area == perimeter can only
/// meet a different shape carrying the same key.

#include "amicable/integer.hpp"

#include <algorithm>
#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amicable::search {

/// Identity of a shape: a family tag ("rect", "tri") and its sorted sides.
struct ShapeFingerprint {
    std::string kind;
    std::vector<integer> sides;
    integer area = 0;
    integer perimeter = 0;

    /// e.g. "rect:1,34" or "tri:3,25,26". Stable across runs.
    std::string shape_id() const {
        std::string id = kind + ":";
        for (std::size_t i = 0; i < sides.size(); ++i) {
            if (i) id += ',';
            id += std::to_string(sides[i]);
        }
        return id;
    }

    friend auto operator<=>(const ShapeFingerprint&, const ShapeFingerprint&) = default;
};

inline ShapeFingerprint make_fingerprint(std::string kind, std::vector<integer> sides, integer area,
                                         integer perimeter) {
    if (area <= 0 || perimeter <= 0)
        throw std::invalid_argument("fingerprint needs positive area and perimeter");
    std::sort(sides.begin(), sides.end());
    return {std::move(kind), std::move(sides), area, perimeter};
}

/// An unordered amicable pair, first < second.
struct AmicableMatch {
    ShapeFingerprint first;
    ShapeFingerprint second;

    friend auto operator<=>(const AmicableMatch&, const AmicableMatch&) = default;
};

/// Both cross equalities hold and the two shapes are distinct.
inline bool verify_certificate(const AmicableMatch& m) {
    return m.first.shape_id() != m.second.shape_id() && m.first.area == m.second.perimeter &&
           m.second.area == m.first.perimeter;
}

inline AmicableMatch make_match(ShapeFingerprint s, ShapeFingerprint t) {
    if (t < s) std::swap(s, t);
    return {std::move(s), std::move(t)};
}

/// All unordered pairs of distinct shapes with crossed area and perimeter.
/// Throws std::invalid_argument when two fingerprints share a shape_id.
inline std::vector<AmicableMatch> match_amicable(std::span<const ShapeFingerprint> shapes) {
    std::set<std::string> ids;
    for (const auto& s : shapes)
        if (!ids.insert(s.shape_id()).second)
            throw std::invalid_argument("duplicate shape_id " + s.shape_id());

    std::map<std::pair<integer, integer>, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        by_key[{shapes[i].area, shapes[i].perimeter}].push_back(i);

    std::vector<AmicableMatch> out;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        auto it = by_key.find({shapes[i].perimeter, shapes[i].area});
        if (it == by_key.end()) continue;
        for (std::size_t j : it->second) {
            // Each unordered pair is seen from both ends; keep one.
            if (!(shapes[i] < shapes[j])) continue;
            out.push_back({shapes[i], shapes[j]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Family { rectangles, triangles, equable_rectangles, equable_triangles, mixed };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::rectangles: return "rectangles";
    case Family::triangles: return "triangles";
    case Family::equable_rectangles: return "equable-rectangles";
    case Family::equable_triangles: return "equable-triangles";
    case Family::mixed: return "mixed";
    }
    return "unknown";
}

inline std::optional<Family> family_from_string(std::string_view s) {
    for (Family f : {Family::rectangles, Family::triangles, Family::equable_rectangles,
                     Family::equable_triangles, Family::mixed})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

/// Outcome of one search. `pairs` holds amicable certificates; for the
/// equable families `members` lists the shapes with area == perimeter.
/// A bound is absent when the search is complete without one (divisor
/// enumeration).
struct SearchReport {
    Family family = Family::rectangles;
    std::optional<integer> bound;
    integer shapes_scanned = 0;
    std::vector<AmicableMatch> pairs;
    std::vector<ShapeFingerprint> members;
    std::chrono::nanoseconds elapsed{0};

    /// Everything except elapsed time.
    bool same_result(const SearchReport& o) const {
        return family == o.family && bound == o.bound && shapes_scanned == o.shapes_scanned &&
               pairs == o.pairs && members == o.members;
    }
};

/// Re-verifies every certificate and every member against the input shapes,
/// then returns the report with canonically sorted contents. Throws
/// certificate_error naming the first failing pair or member.
inline SearchReport assemble_report(Family family, std::optional<integer> bound,
                                    std::span<const ShapeFingerprint> shapes, std::vector<AmicableMatch> pairs,
                                    std::chrono::nanoseconds elapsed,
                                    std::vector<ShapeFingerprint> members = {}) {
    std::set<std::string> known;
    for (const auto& s : shapes) known.insert(s.shape_id());

    for (const auto& m : pairs) {
        const std::string label = m.first.shape_id() + " <-> " + m.second.shape_id();
        if (!verify_certificate(m)) throw certificate_error("pair " + label + " fails cross equalities");
        if (!known.count(m.first.shape_id()) || !known.count(m.second.shape_id()))
            throw certificate_error("pair " + label + " references a shape outside the scanned set");
    }
    for (const auto& s : members) {
        if (s.area != s.perimeter) throw certificate_error("member " + s.shape_id() + " is not equable");
        if (!known.count(s.shape_id()))
            throw certificate_error("member " + s.shape_id() + " is outside the scanned set");
    }
    for (auto& m : pairs)
        if (m.second < m.first) std::swap(m.first, m.second);
    std::sort(pairs.begin(), pairs.end());
    std::sort(members.begin(), members.end());

    SearchReport r;
    r.family = family;
    r.bound = bound;
    r.shapes_scanned = static_cast<integer>(shapes.size());
    r.pairs = std::move(pairs);
    r.members = std::move(members);
    r.elapsed = elapsed;
    return r;
}

} // namespace amicable::search
