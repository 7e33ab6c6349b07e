#include "amicable/lattice.hpp"
#include "amicable/triangles.hpp"
#include "amicable/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace amicable;
using namespace amicable::tri;

namespace {

std::vector<oracle::Heronian> raw(const std::vector<HeronianTriangle>& ts) {
    std::vector<oracle::Heronian> out;
    for (const auto& t : ts) out.push_back({t.perimeter(), t.sides.a(), t.sides.b(), t.sides.c(), t.area});
    return out;
}

HeronianTriangle heronian(integer a, integer b, integer c) {
    auto h = as_heronian(TriangleSides(a, b, c));
    if (!h) throw std::logic_error("test triangle is not heronian");
    return *h;
}

// Quadratic definitional scan over the oracle's triangles.
std::vector<std::pair<oracle::Heronian, oracle::Heronian>> naive_pairs(integer max_perimeter) {
    auto all = oracle::heronian(max_perimeter);
    std::vector<std::pair<oracle::Heronian, oracle::Heronian>> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            const auto &s = all[i], &t = all[j];
            if (s.area != t.perimeter || t.area != s.perimeter) continue;
            if (std::tie(s.a, s.b, s.c) < std::tie(t.a, t.b, t.c)) out.push_back({s, t});
        }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.a, x.first.b, x.first.c) < std::tie(y.first.a, y.first.b, y.first.c);
    });
    return out;
}

} // namespace

TEST(TriangleSides, CanonicalAndValidated) {
    TriangleSides t(26, 3, 25);
    EXPECT_EQ(t.as_vector(), (std::vector<integer>{3, 25, 26}));
    EXPECT_EQ(t.perimeter(), 54);
    EXPECT_EQ(TriangleSides(t.c(), t.a(), t.b()), t);
    EXPECT_THROW(TriangleSides(1, 1, 3), std::invalid_argument);
    EXPECT_THROW(TriangleSides(1, 2, 3), std::invalid_argument);
    EXPECT_THROW(TriangleSides(0, 2, 2), std::invalid_argument);
}

TEST(SixteenAreaSq, Examples) {
    EXPECT_EQ(sixteen_area_sq(TriangleSides(3, 4, 5)), 576);
    EXPECT_EQ(sixteen_area_sq(TriangleSides(3, 25, 26)), 20736);
    EXPECT_EQ(sixteen_area_sq(TriangleSides(1, 1, 1)), 3);
}

TEST(AsHeronian, Examples) {
    EXPECT_EQ(as_heronian(TriangleSides(9, 12, 15))->area, 54);
    EXPECT_EQ(as_heronian(TriangleSides(3, 4, 5))->area, 6);
    EXPECT_FALSE(as_heronian(TriangleSides(2, 3, 4)));
    EXPECT_EQ(sixteen_area_sq(TriangleSides(2, 3, 4)), 135);
    EXPECT_FALSE(as_heronian(TriangleSides(1, 1, 1)));
}

TEST(EnumerateHeronian, SmallBounds) {
    auto upto12 = enumerate_heronian(12);
    ASSERT_EQ(upto12.size(), 1u);
    EXPECT_EQ(upto12[0], heronian(3, 4, 5));

    auto upto16 = enumerate_heronian(16);
    ASSERT_EQ(upto16.size(), 2u);
    EXPECT_EQ(upto16[1].sides, TriangleSides(5, 5, 6));
    EXPECT_EQ(upto16[1].area, 12); // height 4 on base 6
    EXPECT_THROW(enumerate_heronian(2), std::invalid_argument);
}

TEST(EnumerateHeronian, MatchesExpandedPolynomialOracle) {
    for (integer bound : {3, 12, 16, 30, 60, 90})
        EXPECT_EQ(raw(enumerate_heronian(bound)), oracle::heronian(bound)) << "bound " << bound;
}

TEST(EnumerateHeronian, ContainsTheAmicablePair) {
    auto all = enumerate_heronian(54);
    EXPECT_NE(std::find(all.begin(), all.end(), heronian(3, 25, 26)), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), heronian(9, 12, 15)), all.end());
}

TEST(EnumerateHeronian, ParallelIsScheduleIndependent) {
    const auto serial = enumerate_heronian(150);
    EXPECT_EQ(enumerate_heronian(150, 3), serial);
    EXPECT_EQ(enumerate_heronian(150, 8), serial);
}

TEST(AmicableTriangles, Bound120) {
    auto pairs = find_amicable_triangle_pairs(120);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0].first, heronian(3, 25, 26));
    EXPECT_EQ(pairs[0].second, heronian(9, 12, 15));
    EXPECT_EQ(pairs[0].first.area, pairs[0].second.perimeter());
    EXPECT_EQ(pairs[0].second.area, pairs[0].first.perimeter());
}

TEST(AmicableTriangles, SmallBounds) {
    EXPECT_TRUE(find_amicable_triangle_pairs(30).empty());
    EXPECT_TRUE(find_amicable_triangle_pairs(53).empty());
    EXPECT_EQ(find_amicable_triangle_pairs(54).size(), 1u);
}

TEST(AmicableTriangles, JoinEqualsQuadraticScan) {
    for (integer bound : {10, 30, 54, 80, 120}) {
        auto joined = find_amicable_triangle_pairs(bound);
        auto naive = naive_pairs(bound);
        ASSERT_EQ(joined.size(), naive.size()) << "bound " << bound;
        for (std::size_t i = 0; i < joined.size(); ++i) {
            EXPECT_EQ(joined[i].first.sides.as_vector(),
                      (std::vector<integer>{naive[i].first.a, naive[i].first.b, naive[i].first.c}));
            EXPECT_EQ(joined[i].second.sides.as_vector(),
                      (std::vector<integer>{naive[i].second.a, naive[i].second.b, naive[i].second.c}));
            EXPECT_TRUE(cross_equal(joined[i].first, joined[i].second));
        }
    }
}

TEST(EquableTriangles, FiveWithinBound) {
    // Pinned from oracle::heronian(200) filtered on area == perimeter.
    std::vector<oracle::Heronian> expected;
    for (const auto& h : oracle::heronian(200))
        if (h.area == h.perimeter) expected.push_back(h);
    ASSERT_EQ(expected.size(), 5u);

    auto found = find_equable_triangles(200);
    EXPECT_EQ(raw(found), expected);
    std::vector<std::vector<integer>> triples;
    for (const auto& t : found) {
        EXPECT_EQ(t.area, t.perimeter());
        triples.push_back(t.sides.as_vector());
    }
    EXPECT_EQ(triples, (std::vector<std::vector<integer>>{
                           {6, 8, 10}, {5, 12, 13}, {9, 10, 17}, {7, 15, 20}, {6, 25, 29}}));
    EXPECT_EQ(find_equable_triangles(60).size(), 5u);
}

TEST(EquableTriangles, NoneAtSmallPerimeter) {
    // A <= P^2 / (12 sqrt 3) < P for P <= 20.
    for (integer p = 3; p <= 20; ++p) EXPECT_LT(p * p / (12.0 * std::sqrt(3.0)), p);
    EXPECT_TRUE(find_equable_triangles(20).empty());
}

TEST(SumTwoSquares, Examples) {
    EXPECT_EQ(sum_two_squares_reps(25), (std::vector<lattice::LatticePoint>{{0, 5}, {3, 4}, {4, 3}, {5, 0}}));
    EXPECT_EQ(sum_two_squares_reps(2), (std::vector<lattice::LatticePoint>{{1, 1}}));
    EXPECT_EQ(sum_two_squares_reps(0), (std::vector<lattice::LatticePoint>{{0, 0}}));
    EXPECT_TRUE(sum_two_squares_reps(3).empty());
    auto reps = sum_two_squares_reps(625);
    for (lattice::LatticePoint p : {lattice::LatticePoint{7, 24}, {15, 20}, {20, 15}, {24, 7}, {0, 25}, {25, 0}})
        EXPECT_NE(std::find(reps.begin(), reps.end(), p), reps.end());
    EXPECT_THROW(sum_two_squares_reps(-1), std::invalid_argument);
}

TEST(SumTwoSquares, MatchesDoubleLoop) {
    for (integer n = 0; n <= 2000; ++n) {
        std::vector<lattice::LatticePoint> expected;
        for (auto [p, q] : oracle::two_squares(n)) expected.push_back({p, q});
        ASSERT_EQ(sum_two_squares_reps(n), expected) << n;
    }
}

TEST(EmbedTriangle, PublishedPlacements) {
    auto e1 = embed_triangle(heronian(9, 12, 15));
    ASSERT_TRUE(e1);
    EXPECT_TRUE(lattice::lattice_congruent_triangles(e1->polygon(), placement_9_12_15()));
    EXPECT_EQ(lattice::twice_area(e1->polygon()), 108);

    auto e2 = embed_triangle(heronian(3, 25, 26));
    ASSERT_TRUE(e2);
    EXPECT_TRUE(lattice::lattice_congruent_triangles(e2->polygon(), placement_3_25_26()));
    EXPECT_EQ(lattice::twice_area(e2->polygon()), 72);
    EXPECT_EQ(*e2, (TriangleEmbedding{{0, 0}, {24, 10}, {24, 7}}));
}

TEST(EmbedTriangle, RightTriangle345) {
    auto e = embed_triangle(heronian(3, 4, 5));
    ASSERT_TRUE(e);
    EXPECT_EQ(e->v0, (lattice::LatticePoint{0, 0}));
    EXPECT_TRUE(lattice::lattice_congruent_triangles(e->polygon(), lattice::LatticePolygon{{0, 0}, {3, 0}, {0, 4}}));
}

TEST(EmbedTriangle, EveryHeronianUpTo60Embeds) {
    for (const auto& t : enumerate_heronian(60)) {
        auto e = embed_triangle(t);
        ASSERT_TRUE(e) << t.sides.a() << ',' << t.sides.b() << ',' << t.sides.c();
        auto poly = e->polygon();
        EXPECT_EQ(lattice::twice_area(poly), 2 * t.area);
        auto sides = lattice::integer_side_lengths(poly);
        ASSERT_TRUE(sides);
        std::sort(sides->begin(), sides->end());
        EXPECT_EQ(*sides, t.sides.as_vector());
    }
}

TEST(EmbedTriangle, CanonicalUnderSymmetry) {
    // Re-running from any symmetric image gives the same canonical placement,
    // since the candidate set is closed under the eight symmetries.
    const auto t = heronian(13, 14, 15);
    const auto e = embed_triangle(t);
    ASSERT_TRUE(e);
    EXPECT_EQ(embed_triangle(t), e);
    for (int s = 0; s < lattice::symmetry_count; ++s) {
        TriangleEmbedding img{{0, 0}, lattice::apply_symmetry(s, e->v1), lattice::apply_symmetry(s, e->v2)};
        EXPECT_LE(img, *e);
    }
}
