#include <gtest/gtest.h>

#include "plethyx/error.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/random.hpp"
#include "plethyx/rsk.hpp"

using namespace plethyx;

namespace {

Tableau t1() { return Tableau::straight({{1, 1, 2, 2, 3, 3, 3}, {2, 3, 3, 4}, {4, 4, 5}}); }
Tableau t2() { return Tableau::straight({{1, 2, 2, 2, 2}, {2, 3, 3}, {3, 4}, {5}}); }

// Definition-level inner corners: inner cells with no inner cell east or south.
std::vector<Cell> corners_by_scan(const SkewShape& s) {
    std::vector<Cell> out;
    const auto& in = s.inner();
    for (std::size_t r = 0; r < in.length(); ++r)
        for (int c = 0; c < in[r]; ++c) {
            bool east = c + 1 < in[r];
            bool south = c < in[r + 1];
            if (!east && !south) out.push_back({static_cast<int>(r), c});
        }
    return out;
}

} // namespace

TEST(InnerCorners, Examples) {
    EXPECT_EQ(inner_corners(SkewShape(Partition{2, 2}, Partition{1, 1})), (std::vector<Cell>{{1, 0}}));
    EXPECT_TRUE(inner_corners(SkewShape(Partition{3, 1})).empty());
    SkewShape s(Partition{9, 7, 4}, Partition{3, 2});
    EXPECT_EQ(inner_corners(s), corners_by_scan(s));
    for (const auto& outer : partitions_up_to(7))
        for (const auto& inner : subpartitions(outer)) {
            SkewShape sk(outer, inner);
            EXPECT_EQ(inner_corners(sk), corners_by_scan(sk));
        }
}

TEST(StarProduct, PlacesOperandsAsDisplayed) {
    Tableau s = star_product(t1(), t2());
    EXPECT_EQ(s.outer(), (Partition{12, 10, 9, 8, 7, 4, 3}));
    EXPECT_EQ(s.inner(), (Partition{7, 7, 7, 7}));
    EXPECT_EQ(s.rows(), (std::vector<std::vector<int>>{
                            {1, 2, 2, 2, 2}, {2, 3, 3}, {3, 4}, {5}, {1, 1, 2, 2, 3, 3, 3}, {2, 3, 3, 4}, {4, 4, 5}}));
    EXPECT_EQ(content(s), content(t1()) + content(t2()));
}

TEST(StarProduct, EmptyOperandIsIdentity) {
    EXPECT_EQ(star_product(Tableau{}, t2()), t2());
    EXPECT_EQ(product(t1(), Tableau{}), t1());
}

TEST(Slide, ReproducesKnownFrames) {
    Tableau s = star_product(t1(), t2());
    SlideTrace first = jdt_slide_traced(s, {3, 6});
    EXPECT_EQ(first.path, (std::vector<Cell>{{3, 6}, {4, 6}}));
    Tableau frame2(SkewShape(Partition{12, 10, 9, 8, 6, 4, 3}, Partition{7, 7, 7, 6}),
                   {{1, 2, 2, 2, 2}, {2, 3, 3}, {3, 4}, {3, 5}, {1, 1, 2, 2, 3, 3}, {2, 3, 3, 4}, {4, 4, 5}});
    EXPECT_EQ(first.result, frame2);

    SlideTrace second = jdt_slide_traced(frame2, {2, 6});
    EXPECT_EQ(second.path, (std::vector<Cell>{{2, 6}, {3, 6}, {3, 7}}));
    Tableau frame3(SkewShape(Partition{12, 10, 9, 7, 6, 4, 3}, Partition{7, 7, 6, 6}),
                   {{1, 2, 2, 2, 2}, {2, 3, 3}, {3, 3, 4}, {5}, {1, 1, 2, 2, 3, 3}, {2, 3, 3, 4}, {4, 4, 5}});
    EXPECT_EQ(second.result, frame3);
    EXPECT_EQ(inner_corners(frame3.shape()).front(), (Cell{1, 6}));
}

TEST(Slide, SingleEntry) {
    Tableau t(SkewShape(Partition{2, 1}, Partition{1}), {{7}, {3}});
    Tableau r = jdt_slide(t, {0, 0});
    EXPECT_EQ(r, Tableau::straight({{3, 7}}));
}

TEST(Slide, RejectsNonCorner) {
    Tableau t(SkewShape(Partition{3, 3}, Partition{2, 1}), {{1}, {1, 2}});
    EXPECT_THROW(jdt_slide(t, {0, 0}), InvalidCorner);
    EXPECT_THROW(jdt_slide(t, {1, 1}), InvalidCorner);
}

TEST(Rectify, ProductExample) {
    // A commonly quoted T lacks the final 3 of row one: 24 cells for 25 letters.
    Tableau quoted = Tableau::straight(
        {{1, 1, 1, 2, 2, 2, 2, 2, 2}, {2, 2, 3, 3, 3, 3, 3, 3}, {3, 4, 4, 4}, {4, 5}, {5}});
    EXPECT_EQ(quoted.cell_count() + 1, t1().cell_count() + t2().cell_count());
    Tableau want = Tableau::straight(
        {{1, 1, 1, 2, 2, 2, 2, 2, 2, 3}, {2, 2, 3, 3, 3, 3, 3, 3}, {3, 4, 4, 4}, {4, 5}, {5}});
    std::vector<int> word = reading_word(t1());
    for (int v : reading_word(t2())) word.push_back(v);
    EXPECT_EQ(insert_word(word), want);
    EXPECT_EQ(product(t1(), t2()), want);
    EXPECT_EQ(rectify(star_product(t1(), t2())), want);
    EXPECT_EQ(rectified_shape(star_product(t1(), t2())), want.outer());
}

TEST(Rectify, StraightIsUnchanged) {
    EXPECT_EQ(rectify(t1()), t1());
    EXPECT_TRUE(rectify_traced(t1()).empty());
}

TEST(Rectify, TraceEndsAtRectification) {
    Tableau s = star_product(t1(), t2());
    auto frames = rectify_traced(s);
    ASSERT_EQ(frames.size(), 28u);
    EXPECT_EQ(frames.back().result, rectify(s));
    for (const auto& f : frames) EXPECT_TRUE(f.result.is_semistandard());
}

TEST(Rectify, SlideOrderIndependence) {
    for (std::uint64_t k = 0; k < 100; ++k) {
        Rng rng = item_rng(11, k);
        Tableau t = random_skew_tableau(rng, 12, 5);
        Rng a = item_rng(12, k), b = item_rng(13, k);
        auto pick = [](Rng& r) {
            return [&r](std::span<const Cell> cs) {
                return std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(r);
            };
        };
        Tableau ra = rectify(t, pick(a));
        Tableau rb = rectify(t, pick(b));
        EXPECT_EQ(ra, rb);
        EXPECT_EQ(ra, rectify(t));
        EXPECT_EQ(content(ra), content(t));
        EXPECT_TRUE(ra.is_semistandard());
    }
}

TEST(Product, Associative) {
    for (std::uint64_t k = 0; k < 200; ++k) {
        Rng rng = item_rng(21, k);
        Tableau a = random_straight_tableau(rng, 6, 5);
        Tableau b = random_straight_tableau(rng, 6, 5);
        Tableau c = random_straight_tableau(rng, 6, 5);
        EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
    }
}

TEST(Slide, OutputStaysSemistandard) {
    for (std::uint64_t k = 0; k < 200; ++k) {
        Rng rng = item_rng(31, k);
        Tableau t = random_skew_tableau(rng, 10, 5);
        for (Cell c : inner_corners(t.shape())) EXPECT_TRUE(jdt_slide(t, c).is_semistandard());
    }
}
