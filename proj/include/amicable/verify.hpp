#pragma once

/// @file verify.hpp
/// @brief End-to-end verification of both classification results: the five
/// amicable rectangle pairs and the single amicable triangle pair.

#include "amicable/lattice.hpp"
#include "amicable/rectangles.hpp"
#include "amicable/reports.hpp"
#include "amicable/triangles.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amicable {

/// Default bounds for every search; overridable from the command line.
struct VerifyConfig {
    integer rect_max_side = 200;
    integer tri_max_perimeter = 120;
    integer equable_max_perimeter = 200;
    /// Test hook: the named check is forced to fail.
    std::optional<std::string> inject_fault;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct EmbeddingRecord {
    tri::HeronianTriangle triangle;
    tri::TriangleEmbedding embedding;
    integer twice_area = 0;
    std::vector<integer> squared_sides; // sorted
};

struct VerificationReport {
    VerifyConfig config;
    std::vector<CheckResult> checks;
    std::vector<search::AmicableMatch> pairs; // rectangles then triangles
    std::vector<EmbeddingRecord> embeddings;
    std::vector<search::ShapeFingerprint> equable_rectangles;
    std::vector<search::ShapeFingerprint> equable_triangles;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

/// The five rectangle pairs, in the order they are usually listed.
inline std::vector<rect::RectAmicablePair> known_rectangle_pairs() {
    using rect::RectSides;
    return {{RectSides(1, 34), RectSides(7, 10)},
            {RectSides(1, 38), RectSides(6, 13)},
            {RectSides(1, 54), RectSides(5, 22)},
            {RectSides(2, 10), RectSides(4, 6)},
            {RectSides(2, 13), RectSides(3, 10)}};
}

/// Published placements of the amicable triangle pair.
inline lattice::LatticePolygon placement_9_12_15() { return {{0, 0}, {0, 9}, {12, 0}}; }
inline lattice::LatticePolygon placement_3_25_26() { return {{0, 0}, {24, 7}, {24, 10}}; }

inline std::vector<std::string> check_names() {
    return {"rect-divisor-enumeration", "rect-divisor-vs-oracle", "rect-dominance-audit",
            "rect-equable-exclusion",   "rect-formula-consistency", "tri-amicable-search",
            "tri-embedding-9-12-15",    "tri-embedding-3-25-26",    "tri-equable-count"};
}

/// Cramer's y = (2a^2 + 4x)/(ax - 4) against the per-branch forms
/// (4x + 2)/(x - 4) for a = 1 and (2x + 4)/(x - 2) for a = 2, compared as
/// exact rationals by cross-multiplication.
inline bool y_formulas_agree(integer a, integer x) {
    const integer num = 2 * a * a + 4 * x, den = a * x - 4;
    integer snum = 0, sden = 0;
    if (a == 1) { snum = 4 * x + 2; sden = x - 4; }
    else if (a == 2) { snum = 2 * x + 4; sden = x - 2; }
    else throw std::invalid_argument("y_formulas_agree: a must be 1 or 2");
    if (den == 0 || sden == 0) throw std::invalid_argument("y_formulas_agree: singular system");
    return checked_mul(num, sden) == checked_mul(snum, den);
}

namespace detail {

inline EmbeddingRecord embed_record(const tri::HeronianTriangle& t) {
    auto e = tri::embed_triangle(t);
    if (!e) throw certificate_error("no lattice placement found for a heronian triangle");
    auto poly = e->polygon();
    auto sq = lattice::squared_side_lengths(poly);
    std::sort(sq.begin(), sq.end());
    return {t, *e, lattice::twice_area(poly), sq};
}

inline CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    // body returns an empty string on success, otherwise the failure detail.
    try {
        std::string failure = body();
        return {name, failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

} // namespace detail

inline VerificationReport verify_all(const VerifyConfig& config = {}) {
    if (config.inject_fault) {
        auto names = check_names();
        if (std::find(names.begin(), names.end(), *config.inject_fault) == names.end())
            throw std::invalid_argument("unknown check name: " + *config.inject_fault);
    }

    VerificationReport report;
    report.config = config;
    auto record = [&](const std::string& name, const std::function<std::string()>& body) {
        report.checks.push_back(detail::run_check(name, body));
        if (config.inject_fault == name) {
            report.checks.back().passed = false;
            report.checks.back().detail = "injected fault";
        }
    };

    const auto divisor_pairs = rect::enumerate_by_divisors();

    record("rect-divisor-enumeration", [&] {
        return divisor_pairs == known_rectangle_pairs() ? "" : "divisor enumeration differs from the five known pairs";
    });

    record("rect-divisor-vs-oracle", [&] {
        auto oracle = rect::brute_force_pairs(config.rect_max_side);
        if (oracle != divisor_pairs)
            return "exhaustive scan found " + std::to_string(oracle.size()) + " pairs, divisor route " +
                   std::to_string(divisor_pairs.size());
        auto joined = rect_oracle_report(config.rect_max_side);
        if (joined.pairs != detail::to_matches(oracle)) return std::string("fingerprint join disagrees with scan");
        return std::string();
    });

    record("rect-dominance-audit", [&] {
        auto shorts = rect::small_side_candidates(config.rect_max_side);
        if (shorts != std::vector<integer>{1, 2}) return std::string("candidate short sides are not {1, 2}");
        for (const auto& p : rect::brute_force_pairs(config.rect_max_side)) {
            bool ok = false;
            for (const auto& r : {p.first(), p.second()})
                if (rect::perimeter_dominant(r) && (r.short_side() == 1 || r.short_side() == 2)) ok = true;
            if (!ok) return std::string("pair without a small perimeter-dominant member");
        }
        return std::string();
    });

    record("rect-equable-exclusion", [&] {
        auto equable = rect::equable_rectangles(config.rect_max_side);
        if (equable != std::vector<rect::RectSides>{{3, 6}, {4, 4}})
            return std::string("equable rectangles are not {3x6, 4x4}");
        for (const auto& p : divisor_pairs)
            for (const auto& r : equable)
                if (p.first() == r || p.second() == r) return std::string("equable rectangle in an amicable pair");
        for (const auto& r : equable) report.equable_rectangles.push_back(fingerprint(r));
        return std::string();
    });

    record("rect-formula-consistency", [&] {
        for (integer a : {1, 2})
            for (integer x = 1; x <= 500; ++x) {
                if (a * x == 4) continue;
                if (!y_formulas_agree(a, x))
                    return "y formulas disagree at a=" + std::to_string(a) + ", x=" + std::to_string(x);
            }
        return std::string();
    });

    for (const auto& p : divisor_pairs)
        report.pairs.push_back(search::make_match(fingerprint(p.first()), fingerprint(p.second())));

    record("tri-amicable-search", [&] {
        auto pairs = tri::find_amicable_triangle_pairs(config.tri_max_perimeter);
        auto joined = tri_search_report(config.tri_max_perimeter);
        if (pairs.size() != 1) return "expected one triangle pair, found " + std::to_string(pairs.size());
        const auto& p = pairs.front();
        if (p.first.sides != tri::TriangleSides(3, 25, 26) || p.second.sides != tri::TriangleSides(9, 12, 15))
            return std::string("triangle pair is not (3,25,26) <-> (9,12,15)");
        if (p.first.area != 36 || p.second.area != 54 || !tri::cross_equal(p.first, p.second))
            return std::string("triangle pair certificate mismatch");
        if (joined.pairs.size() != 1) return std::string("triangle report disagrees with pair finder");
        report.pairs.push_back(search::make_match(fingerprint(p.first), fingerprint(p.second)));
        return std::string();
    });

    auto embedding_check = [&](integer a, integer b, integer c, const lattice::LatticePolygon& published,
                               integer twice_area, std::vector<integer> squared) {
        return [&report, a, b, c, published, twice_area, squared] {
            auto h = tri::as_heronian(tri::TriangleSides(a, b, c));
            if (!h) return std::string("triangle is not heronian");
            auto rec = detail::embed_record(*h);
            if (rec.twice_area != twice_area) return "twice-area " + std::to_string(rec.twice_area);
            if (rec.squared_sides != squared) return std::string("squared sides differ");
            if (!lattice::lattice_congruent_triangles(rec.embedding.polygon(), published))
                return std::string("placement not congruent to the published one");
            report.embeddings.push_back(rec);
            return std::string();
        };
    };
    record("tri-embedding-9-12-15", embedding_check(9, 12, 15, placement_9_12_15(), 108, {81, 144, 225}));
    record("tri-embedding-3-25-26", embedding_check(3, 25, 26, placement_3_25_26(), 72, {9, 625, 676}));

    record("tri-equable-count", [&] {
        auto equable = tri::find_equable_triangles(config.equable_max_perimeter);
        for (const auto& t : equable) {
            if (t.area != t.perimeter()) return std::string("equable triangle with area != perimeter");
            report.equable_triangles.push_back(fingerprint(t));
        }
        if (equable.size() != 5) return "expected 5 equable triangles, found " + std::to_string(equable.size());
        return std::string();
    });

    return report;
}

} // namespace amicable
