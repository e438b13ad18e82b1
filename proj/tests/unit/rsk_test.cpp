#include <gtest/gtest.h>

#include "plethyx/error.hpp"
#include "plethyx/io.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/random.hpp"
#include "plethyx/rsk.hpp"

using namespace plethyx;

namespace {

TableauTuple row_example() {
    return TableauTuple::from_lists(TupleKind::rows, {{1, 2, 3, 4}, {1, 2, 3, 3}, {1, 1, 2}, {1, 2, 3}});
}

TableauTuple column_example() {
    return TableauTuple::from_lists(TupleKind::columns, {{1, 2, 3, 5, 7}, {1, 3, 4, 6, 8}, {2, 3, 5}, {1, 2, 4}});
}

} // namespace

TEST(Biword, RejectsUnsortedLetters) {
    EXPECT_THROW(Biword(std::vector<BiLetter>{{2, 1}, {1, 1}}), MalformedBiword);
    EXPECT_THROW(Biword(std::vector<BiLetter>{{1, 2}, {1, 1}}), MalformedBiword);
    EXPECT_THROW(BurgeWord(std::vector<BiLetter>{{1, 1}, {1, 2}}), MalformedBiword);
    EXPECT_THROW(BurgeWord(std::vector<BiLetter>{{1, 1}, {1, 1}}), MalformedBiword);
}

TEST(Rsk, RowTupleEncoding) {
    Biword w = row_tuple_to_biword(row_example());
    EXPECT_EQ(w.top_word(), (std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4}));
    EXPECT_EQ(w.bottom_word(), (std::vector<int>{1, 2, 3, 4, 1, 2, 3, 3, 1, 1, 2, 1, 2, 3}));
    EXPECT_EQ(biword_to_row_tuple(w), row_example());
    EXPECT_EQ(row_tuple_to_biword(TableauTuple::from_lists(TupleKind::rows, {{1}})).letters(),
              (std::vector<BiLetter>{{1, 1}}));
}

TEST(Rsk, WorkedExample) {
    RskPair pq = rsk(row_tuple_to_biword(row_example()));
    EXPECT_EQ(pq.p, Tableau::straight({{1, 1, 1, 1, 1, 2, 3}, {2, 2, 2, 3}, {3, 3}, {4}}));
    // Recording tableau computed by hand, one bumping step at a time.
    EXPECT_EQ(pq.q, Tableau::straight({{1, 1, 1, 1, 2, 4, 4}, {2, 2, 2, 3}, {3, 3}, {4}}));
    EXPECT_EQ(rsk_via_product(row_tuple_to_biword(row_example())), pq);
}

TEST(Rsk, SingleLetter) {
    RskPair pq = rsk(Biword(std::vector<BiLetter>{{1, 5}}));
    EXPECT_EQ(pq.p, Tableau::straight({{5}}));
    EXPECT_EQ(pq.q, Tableau::straight({{1}}));
}

TEST(Rsk, RoundTrip) {
    for (std::uint64_t k = 0; k < 10000; ++k) {
        Rng rng = item_rng(5, k);
        Biword w = random_biword(rng, 20, 8);
        RskPair pq = rsk(w);
        ASSERT_EQ(rsk_inverse(pq), w) << format_biword(w.letters());
        ASSERT_TRUE(pq.p.is_semistandard());
        ASSERT_TRUE(pq.q.is_semistandard());
        ASSERT_EQ(content(pq.p), content(Tableau::straight({w.bottom_word()})));
    }
}

TEST(RskTilde, BurgeEncoding) {
    BurgeWord w = column_tuple_to_burge(column_example());
    EXPECT_EQ(w.top_word(), (std::vector<int>{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4}));
    EXPECT_EQ(w.bottom_word(), (std::vector<int>{7, 5, 3, 2, 1, 8, 6, 4, 3, 1, 5, 3, 2, 4, 2, 1}));
    EXPECT_EQ(burge_to_column_tuple(w), column_example());
    auto single = TableauTuple::from_lists(TupleKind::columns, {{1, 2}});
    EXPECT_EQ(column_tuple_to_burge(single).letters(), (std::vector<BiLetter>{{1, 2}, {1, 1}}));
}

TEST(RskTilde, WorkedExample) {
    RskPair pq = rsk_tilde(column_tuple_to_burge(column_example()));
    EXPECT_EQ(pq.p, Tableau::straight({{1, 1, 1, 2}, {2, 2, 3, 4}, {3, 3, 5}, {4, 6}, {5, 8}, {7}}));
    EXPECT_EQ(pq.q, Tableau::straight({{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2}, {1, 2}, {4}}));
    EXPECT_TRUE(is_conjugate_semistandard(pq.q));
}

TEST(RskTilde, SingleLetter) {
    RskPair pq = rsk_tilde(BurgeWord(std::vector<BiLetter>{{3, 2}}));
    EXPECT_EQ(pq.p, Tableau::straight({{2}}));
    EXPECT_EQ(pq.q, Tableau::straight({{3}}));
}

TEST(RskTilde, RoundTrip) {
    for (std::uint64_t k = 0; k < 10000; ++k) {
        Rng rng = item_rng(6, k);
        BurgeWord w = random_burge_word(rng, 20, 8);
        RskPair pq = rsk_tilde(w);
        ASSERT_EQ(rsk_tilde_inverse(pq), w) << format_biword(w.letters());
        ASSERT_TRUE(pq.p.is_semistandard());
        ASSERT_TRUE(is_conjugate_semistandard(pq.q));
    }
}

TEST(Rsk, TupleRoundTrips) {
    for (std::uint64_t k = 0; k < 300; ++k) {
        Rng rng = item_rng(8, k);
        std::vector<int> sizes{3, 3, 2, 2, 1};
        auto rows = random_tuple(rng, TupleKind::rows, sizes, 6);
        EXPECT_EQ(biword_to_row_tuple(row_tuple_to_biword(rows)), rows);
        auto cols = random_tuple(rng, TupleKind::columns, sizes, 6);
        EXPECT_EQ(burge_to_column_tuple(column_tuple_to_burge(cols)), cols);
    }
}

TEST(Rsk, InsertionTableauIsIteratedProduct) {
    for (std::uint64_t k = 0; k < 300; ++k) {
        Rng rng = item_rng(9, k);
        auto t = random_tuple(rng, TupleKind::rows, {4, 3, 3, 1}, 5);
        Tableau acc;
        for (const auto& m : t.members()) acc = product(acc, m);
        RskPair pq = rsk(row_tuple_to_biword(t));
        EXPECT_EQ(pq.p, acc);
        EXPECT_EQ(content(pq.p), content(t));
        std::vector<int> profile;
        for (std::size_t i = 0; i < pq.q.rows().size(); ++i)
            for (int v : pq.q.rows()[i]) {
                if (static_cast<std::size_t>(v) > profile.size()) profile.resize(static_cast<std::size_t>(v), 0);
                ++profile[static_cast<std::size_t>(v - 1)];
            }
        EXPECT_EQ(profile, t.profile());
    }
}

TEST(Subtableau, TableExample) {
    Tableau q = Tableau::straight({{1, 1, 2}, {2, 3}, {4}});
    Tableau q2 = subtableau(q, 2);
    EXPECT_EQ(q2, Tableau(SkewShape(Partition{3, 2, 1}, Partition{3, 1}), {{}, {3}, {4}}));
    Tableau q1 = subtableau(q, 1);
    EXPECT_EQ(q1, Tableau::straight({{1, 1, 2}, {2}}));
    Tableau two = Tableau::straight({{1, 2}, {2}});
    EXPECT_EQ(subtableau(two, 1), two);
}

TEST(Subtableau, PiecesCoverEveryCell) {
    Tableau q = Tableau::straight({{1, 1, 2, 3, 5}, {2, 4, 4, 6}, {3, 6}, {5}});
    int cells = 0;
    for (int i = 1; i <= 3; ++i) cells += subtableau(q, i).cell_count();
    EXPECT_EQ(cells, q.cell_count());
}

TEST(SubBiword, FirstPairIsProduct) {
    auto t = TableauTuple::from_lists(TupleKind::rows, {{1, 3}, {2, 2}, {1}, {4}});
    EXPECT_EQ(sub_biword_rsk(t, 1).p, product(t.members()[0], t.members()[1]));
    auto pair = TableauTuple::from_lists(TupleKind::rows, {{1, 3}, {2, 2}});
    EXPECT_EQ(sub_biword_rsk(pair, 1), rsk(row_tuple_to_biword(pair)));
}

TEST(SubBiword, RecordingPiecesRectify) {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        Rng rng = item_rng(10, k);
        Partition lambda;
        while (lambda.empty()) lambda = random_partition(rng, 6);
        auto t = random_tuple(rng, TupleKind::rows, doubled(lambda).parts(), 6);
        RskPair pq = rsk(row_tuple_to_biword(t));
        for (int i = 1; i <= static_cast<int>(lambda.length()); ++i)
            ASSERT_EQ(sub_biword_rsk(t, i).q, rectify(subtableau(pq.q, i)));
    }
}

TEST(SubBurge, ConjugateRecordingPiecesRectify) {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        Rng rng = item_rng(12, k);
        Partition lambda;
        while (lambda.empty()) lambda = random_partition(rng, 6);
        auto t = random_tuple(rng, TupleKind::columns, doubled(lambda).parts(), 7);
        RskPair pq = rsk_tilde(column_tuple_to_burge(t));
        for (int i = 1; i <= static_cast<int>(lambda.length()); ++i)
            ASSERT_EQ(conjugate(sub_burge_rsk(t, i).q), rectify(conjugate(subtableau(pq.q, i))));
    }
}
