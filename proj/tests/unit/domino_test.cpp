#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "plethyx/domino.hpp"
#include "plethyx/error.hpp"

using namespace plethyx;

namespace {

DominoTableau two_verticals() {
    return DominoTableau(Partition{2, 2},
                         {{{0, 0}, {1, 0}, 1, Orientation::vertical}, {{0, 1}, {1, 1}, 1, Orientation::vertical}});
}

DominoTableau stacked_horizontals() {
    return DominoTableau(Partition{2, 2},
                         {{{0, 0}, {0, 1}, 1, Orientation::horizontal}, {{1, 0}, {1, 1}, 2, Orientation::horizontal}});
}

// Canonical form for comparing against the brute-force oracle.
std::vector<std::tuple<int, int, int, int, int>> key(const DominoTableau& d) {
    std::vector<std::tuple<int, int, int, int, int>> out;
    for (const auto& dom : d.dominoes())
        out.emplace_back(dom.first.row, dom.first.col, dom.second.row, dom.second.col, dom.entry);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::tuple<int, int, int, int, int>> key(const oracle::BruteDomino& d) {
    std::vector<std::tuple<int, int, int, int, int>> out;
    for (std::size_t k = 0; k < d.pieces.size(); ++k)
        out.emplace_back(d.pieces[k].first.row, d.pieces[k].first.col, d.pieces[k].second.row, d.pieces[k].second.col,
                         d.entries[k]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(DominoTableau, Validation) {
    EXPECT_NO_THROW(two_verticals());
    EXPECT_THROW(DominoTableau(Partition{2, 2}, {{{0, 0}, {0, 1}, 1, Orientation::horizontal},
                                                 {{1, 0}, {1, 1}, 1, Orientation::horizontal}}),
                 InvalidArgument);
    EXPECT_THROW(DominoTableau(Partition{2, 2}, {{{0, 0}, {1, 0}, 1, Orientation::vertical}}), InvalidArgument);
    EXPECT_THROW(DominoTableau(Partition{2}, {{{0, 0}, {1, 0}, 1, Orientation::vertical}}), InvalidArgument);
    EXPECT_THROW(DominoTableau(Partition{2, 2}, {{{0, 0}, {1, 0}, 2, Orientation::vertical},
                                                 {{0, 1}, {1, 1}, 1, Orientation::vertical}}),
                 InvalidArgument);
}

TEST(Enumerate, SquareContainsBothFamilies) {
    auto all = enumerate_domino_tableaux(Partition{2, 2}, 2);
    EXPECT_NE(std::find(all.begin(), all.end(), two_verticals()), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), stacked_horizontals()), all.end());
}

TEST(Enumerate, SingleHorizontal) {
    auto all = enumerate_domino_tableaux(Partition{2}, 3);
    ASSERT_EQ(all.size(), 3u);
    for (int v = 1; v <= 3; ++v) {
        EXPECT_EQ(all[static_cast<std::size_t>(v - 1)].dominoes().size(), 1u);
        EXPECT_EQ(all[static_cast<std::size_t>(v - 1)].dominoes()[0].entry, v);
    }
}

TEST(Enumerate, MatchesBruteForce) {
    std::vector<std::pair<Partition, int>> cases{{{2, 2}, 2}, {{4, 4}, 3}, {{2, 2, 2, 2}, 3}, {{3, 3}, 3},
                                                 {{4, 2}, 3},  {{3, 2, 1}, 3}, {{6, 6}, 2}, {{2, 2, 2, 2, 2, 2}, 3}};
    for (const auto& [shape, max_entry] : cases) {
        auto mine = enumerate_domino_tableaux(shape, max_entry);
        auto brute = oracle::all_domino_tableaux(shape.parts(), max_entry);
        std::vector<decltype(key(mine[0]))> a, b;
        for (const auto& d : mine) a.push_back(key(d));
        for (const auto& d : brute) b.push_back(key(d));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b) << shape.to_string();
    }
}

TEST(Enumerate, YamanouchiIsFilteredEnumeration) {
    for (const Partition& shape : {Partition{4, 4}, Partition{2, 2, 2, 2}, Partition{6, 6}, Partition{4, 2, 2}}) {
        auto all = enumerate_domino_tableaux(shape);
        std::vector<DominoTableau> filtered;
        for (const auto& d : all)
            if (is_yamanouchi(domino_reading_word(d))) filtered.push_back(d);
        auto yam = enumerate_yamanouchi_domino_tableaux(shape);
        ASSERT_EQ(yam.size(), filtered.size()) << shape.to_string();
        for (const auto& d : yam) EXPECT_NE(std::find(filtered.begin(), filtered.end(), d), filtered.end());
    }
}

TEST(ReadingWord, Examples) {
    EXPECT_EQ(domino_reading_word(two_verticals()), (std::vector<int>{1, 1}));
    EXPECT_EQ(domino_reading_word(stacked_horizontals()), (std::vector<int>{2, 1}));
    for (const auto& d : enumerate_domino_tableaux(Partition{4, 4}, 3))
        EXPECT_EQ(domino_reading_word(d).size(), d.dominoes().size());
}

TEST(Yamanouchi, Words) {
    EXPECT_TRUE(is_yamanouchi({1, 1, 2, 1}));
    EXPECT_TRUE(is_yamanouchi({2, 1}));
    EXPECT_FALSE(is_yamanouchi({2}));
    EXPECT_FALSE(is_yamanouchi({1, 2}));
    EXPECT_TRUE(is_yamanouchi({}));
}

TEST(Cospin, FamilyExtremes) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Domino> vert, horiz;
        for (int c = 0; c < 2 * n; ++c) vert.push_back({{0, c}, {1, c}, 1, Orientation::vertical});
        EXPECT_EQ(cospin(DominoTableau(Partition{2 * n, 2 * n}, vert)), 0);
        for (int r = 0; r < 2 * n; ++r) horiz.push_back({{r, 0}, {r, 1}, r + 1, Orientation::horizontal});
        DominoTableau all_h(two_column_hook(2 * n, 0), horiz);
        EXPECT_TRUE(is_yamanouchi(domino_reading_word(all_h)));
        EXPECT_EQ(cospin(all_h), n);
    }
    EXPECT_EQ(max_vertical_dominoes(Partition{4, 4}), 4);
    EXPECT_EQ(cospin(stacked_horizontals()), 1);
}

TEST(Cospin, HorizontalCountOverTwoOnTwoRowShapes) {
    for (const auto& d : enumerate_yamanouchi_domino_tableaux(Partition{8, 8})) {
        int horizontal = static_cast<int>(d.dominoes().size()) - d.vertical_count();
        EXPECT_EQ(cospin(d), horizontal / 2);
    }
}

TEST(Littlewood, ViaDomino) {
    auto t2 = littlewood_via_domino(2, Basis::h);
    std::map<Partition, SignCounts, std::greater<>> want{
        {Partition{4}, {1, 0}}, {Partition{3, 1}, {0, 1}}, {Partition{2, 2}, {1, 0}}};
    EXPECT_EQ(t2.entries, want);
    auto t1 = littlewood_via_domino(1, Basis::h);
    std::map<Partition, SignCounts, std::greater<>> want1{{Partition{2}, {1, 0}}, {Partition{1, 1}, {0, 1}}};
    EXPECT_EQ(t1.entries, want1);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(littlewood_via_domino(n, Basis::h), decompose_h_square(Partition{n}));
        EXPECT_EQ(littlewood_via_domino(n, Basis::e), decompose_e_square(Partition{n}));
    }
}

TEST(Littlewood, ThreadCountDoesNotChangeOrder) {
    EXPECT_EQ(enumerate_yamanouchi_domino_tableaux(Partition{8, 8}, 1),
              enumerate_yamanouchi_domino_tableaux(Partition{8, 8}, 4));
}

TEST(Render, SquareFamilies) {
    EXPECT_EQ(render_ascii(two_verticals()), "+---+---+\n| 1 | 1 |\n+   +   +\n|   |   |\n+---+---+\n");
    EXPECT_EQ(render_ascii(stacked_horizontals()), "+---+---+\n| 1     |\n+---+---+\n| 2     |\n+---+---+\n");
}
