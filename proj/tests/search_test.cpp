#include "amicable/reports.hpp"
#include "amicable/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace amicable;
using namespace amicable::search;

namespace {

ShapeFingerprint rect_print(integer a, integer b) { return fingerprint(rect::RectSides(a, b)); }

// Definitional O(n^2) scan.
std::vector<AmicableMatch> naive_match(const std::vector<ShapeFingerprint>& shapes) {
    std::vector<AmicableMatch> out;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (std::size_t j = i + 1; j < shapes.size(); ++j) {
            const auto &s = shapes[i], &t = shapes[j];
            if (s.area != t.perimeter || t.area != s.perimeter) continue;
            if (s.shape_id() != t.shape_id()) out.push_back(make_match(s, t));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ShapeFingerprint> known_rectangles() {
    return {rect_print(1, 34), rect_print(7, 10), rect_print(1, 38), rect_print(6, 13), rect_print(1, 54),
            rect_print(5, 22), rect_print(2, 10), rect_print(4, 6),  rect_print(2, 13), rect_print(3, 10)};
}

} // namespace

TEST(ShapeFingerprint, IdsAreStable) {
    EXPECT_EQ(rect_print(34, 1).shape_id(), "rect:1,34");
    EXPECT_EQ(fingerprint(*tri::as_heronian(tri::TriangleSides(26, 25, 3))).shape_id(), "tri:3,25,26");
    EXPECT_THROW(make_fingerprint("rect", {1, 2}, 0, 6), std::invalid_argument);
}

TEST(MatchAmicable, KnownPairsAmongDecoys) {
    auto shapes = known_rectangles();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<integer> side(1, 500);
    // Decoys: large rectangles whose area exceeds every perimeter in play.
    std::set<std::string> ids;
    for (const auto& s : shapes) ids.insert(s.shape_id());
    while (shapes.size() < 1010) {
        auto d = rect_print(side(rng) + 60, side(rng) + 60);
        if (ids.insert(d.shape_id()).second) shapes.push_back(d);
    }
    std::shuffle(shapes.begin(), shapes.end(), rng);
    auto pairs = match_amicable(shapes);
    ASSERT_EQ(pairs.size(), 5u);
    EXPECT_EQ(pairs[0].first.shape_id(), "rect:1,34");
    EXPECT_EQ(pairs[0].second.shape_id(), "rect:7,10");
    EXPECT_EQ(pairs[4].first.shape_id(), "rect:2,13");
    EXPECT_EQ(pairs[4].second.shape_id(), "rect:3,10");
}

TEST(MatchAmicable, EquableShapeNeverPairsWithItself) {
    std::vector<ShapeFingerprint> square{rect_print(4, 4)};
    EXPECT_TRUE(match_amicable(square).empty());
}

TEST(MatchAmicable, DistinctEquableShapesPairAcrossFamilies) {
    // 3x6 rectangle and an equable fingerprint with area = perimeter = 18.
    std::vector<ShapeFingerprint> shapes{rect_print(3, 6), make_fingerprint("tri", {4, 6, 8}, 18, 18)};
    auto pairs = match_amicable(shapes);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_NE(pairs[0].first.kind, pairs[0].second.kind);
}

TEST(MatchAmicable, DuplicateIdsAreRejected) {
    std::vector<ShapeFingerprint> shapes{rect_print(1, 34), rect_print(34, 1)};
    EXPECT_THROW(match_amicable(shapes), std::invalid_argument);
}

TEST(MatchAmicableProperties, JoinEqualsQuadraticScan) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        // Small value ranges force many key collisions, including area == perimeter.
        std::uniform_int_distribution<integer> value(1, 3 + trial), count(0, trial < 30 ? 300 : 5000);
        std::vector<ShapeFingerprint> shapes;
        const integer n = count(rng);
        for (integer i = 0; i < n; ++i)
            shapes.push_back(make_fingerprint("x", {i}, value(rng), value(rng)));
        const auto joined = match_amicable(shapes);
        ASSERT_EQ(joined, naive_match(shapes)) << "trial " << trial;

        std::shuffle(shapes.begin(), shapes.end(), rng);
        ASSERT_EQ(match_amicable(shapes), joined) << "permutation changed result";
        for (const auto& m : joined) ASSERT_NE(m.first.shape_id(), m.second.shape_id());
    }
}

TEST(AssembleReport, RectangleOracleAt200) {
    auto r = rect_oracle_report(200);
    EXPECT_EQ(r.family, Family::rectangles);
    EXPECT_EQ(r.bound, 200);
    EXPECT_EQ(r.shapes_scanned, 200 * 201 / 2);
    EXPECT_EQ(r.pairs.size(), 5u);
}

TEST(AssembleReport, TriangleSearchAt30IsEmpty) {
    auto r = tri_search_report(30);
    EXPECT_EQ(r.family, Family::triangles);
    EXPECT_TRUE(r.pairs.empty());
    EXPECT_GT(r.shapes_scanned, 0);
}

TEST(AssembleReport, EmptyInput) {
    auto r = assemble_report(Family::rectangles, 1, {}, {}, std::chrono::nanoseconds{0});
    EXPECT_EQ(r.shapes_scanned, 0);
    EXPECT_TRUE(r.pairs.empty());
}

TEST(AssembleReport, RejectsBadCertificates) {
    std::vector<ShapeFingerprint> shapes{rect_print(1, 34), rect_print(6, 13)};
    std::vector<AmicableMatch> forged{make_match(shapes[0], shapes[1])};
    EXPECT_THROW(assemble_report(Family::rectangles, 54, shapes, forged, {}), certificate_error);

    std::vector<ShapeFingerprint> only_one{rect_print(1, 34)};
    std::vector<AmicableMatch> dangling{make_match(rect_print(1, 34), rect_print(7, 10))};
    EXPECT_THROW(assemble_report(Family::rectangles, 54, only_one, dangling, {}), certificate_error);

    std::vector<ShapeFingerprint> members{rect_print(1, 34)};
    EXPECT_THROW(assemble_report(Family::equable_rectangles, 54, only_one, {}, {}, members), certificate_error);
}

TEST(AssembleReport, DeterministicAcrossRuns) {
    EXPECT_TRUE(tri_search_report(120).same_result(tri_search_report(120)));
    EXPECT_TRUE(rect_divisor_report().same_result(rect_divisor_report()));
}

TEST(MixedReport, CrossFamilyOnly) {
    auto r = mixed_report(60, 200);
    EXPECT_EQ(r.family, Family::mixed);
    for (const auto& m : r.pairs) {
        EXPECT_NE(m.first.kind, m.second.kind);
        EXPECT_TRUE(verify_certificate(m));
    }
}
