#include "plethyx/rsk.hpp"

#include <algorithm>
#include <string>

#include "plethyx/error.hpp"
#include "plethyx/jdt.hpp"

namespace plethyx {

namespace {

std::vector<BiLetter> zip_words(std::span<const int> top, std::span<const int> bottom) {
    if (top.size() != bottom.size()) throw MalformedBiword("top and bottom words differ in length");
    std::vector<BiLetter> out;
    out.reserve(top.size());
    for (std::size_t k = 0; k < top.size(); ++k) out.push_back({top[k], bottom[k]});
    return out;
}

void check_positive(const std::vector<BiLetter>& letters) {
    for (const auto& l : letters)
        if (l.top <= 0 || l.bottom <= 0) throw MalformedBiword("bi-letters must be positive");
}

std::vector<int> tops(const std::vector<BiLetter>& letters) {
    std::vector<int> out;
    for (const auto& l : letters) out.push_back(l.top);
    return out;
}

std::vector<int> bottoms(const std::vector<BiLetter>& letters) {
    std::vector<int> out;
    for (const auto& l : letters) out.push_back(l.bottom);
    return out;
}

using Rows = std::vector<std::vector<int>>;

// Bumps x through p starting at row 0; returns the row that grew.
std::size_t row_insert(Rows& p, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == p.size()) p.emplace_back();
        auto& row = p[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(*it, x);
    }
}

RskPair insert_letters(const std::vector<BiLetter>& letters) {
    Rows p, q;
    for (const auto& l : letters) {
        std::size_t r = row_insert(p, l.bottom);
        if (r == q.size()) q.emplace_back();
        q[r].push_back(l.top);
    }
    return {Tableau::straight(std::move(p)), Tableau::straight(std::move(q))};
}

// Removes every cell of pq, choosing the largest recording entry each time
// and, among its occurrences, the rightmost (RSK) or lowest (RSK~) cell.
std::vector<BiLetter> uninsert(const RskPair& pq, bool lowest_first) {
    if (!pq.p.shape().is_straight() || pq.p.shape() != pq.q.shape())
        throw InvalidArgument("RSK inverse needs two straight tableaux of the same shape");
    Rows p = pq.p.rows();
    Rows q = pq.q.rows();
    std::vector<BiLetter> out;
    while (!p.empty()) {
        std::size_t best_row = 0;
        int best = 0;
        for (std::size_t r = 0; r < q.size(); ++r) {
            int v = q[r].back();
            bool better = lowest_first ? v >= best : v > best;
            if (better) {
                best = v;
                best_row = r;
            }
        }
        if (best_row + 1 < q.size() && q[best_row + 1].size() == q[best_row].size())
            throw InvalidArgument("recording tableau is not compatible with this insertion");
        q[best_row].pop_back();
        int x = p[best_row].back();
        p[best_row].pop_back();
        for (std::size_t r = best_row; r-- > 0;) {
            auto& row = p[r];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.begin()) throw InvalidArgument("reverse bump failed: insertion tableau is not semistandard");
            --it;
            std::swap(*it, x);
        }
        if (p[best_row].empty()) {
            p.pop_back();
            q.pop_back();
        }
        out.push_back({best, x});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

Biword::Biword(std::vector<BiLetter> letters) : letters_(std::move(letters)) {
    check_positive(letters_);
    for (std::size_t k = 1; k < letters_.size(); ++k)
        if (letters_[k] < letters_[k - 1])
            throw MalformedBiword("biword not in lexicographic order at position " + std::to_string(k));
}

Biword::Biword(std::span<const int> top, std::span<const int> bottom) : Biword(zip_words(top, bottom)) {}

std::vector<int> Biword::top_word() const { return tops(letters_); }
std::vector<int> Biword::bottom_word() const { return bottoms(letters_); }

BurgeWord::BurgeWord(std::vector<BiLetter> letters) : letters_(std::move(letters)) {
    check_positive(letters_);
    for (std::size_t k = 1; k < letters_.size(); ++k) {
        const auto& a = letters_[k - 1];
        const auto& b = letters_[k];
        if (b.top < a.top || (b.top == a.top && b.bottom >= a.bottom))
            throw MalformedBiword("Burge word ordering violated at position " + std::to_string(k));
    }
}

BurgeWord::BurgeWord(std::span<const int> top, std::span<const int> bottom) : BurgeWord(zip_words(top, bottom)) {}

std::vector<int> BurgeWord::top_word() const { return tops(letters_); }
std::vector<int> BurgeWord::bottom_word() const { return bottoms(letters_); }

Tableau insert_word(std::span<const int> word) {
    Rows p;
    for (int x : word) {
        if (x <= 0) throw InvalidArgument("word letters must be positive");
        row_insert(p, x);
    }
    return Tableau::straight(std::move(p));
}

RskPair rsk(const Biword& w) { return insert_letters(w.letters()); }

Biword rsk_inverse(const RskPair& pq) { return Biword(uninsert(pq, false)); }

RskPair rsk_via_product(const Biword& w) {
    Tableau p;
    Rows q;
    for (const auto& l : w.letters()) {
        Partition before = p.outer();
        p = product(p, Tableau::straight({{l.bottom}}));
        const Partition& after = p.outer();
        std::size_t r = 0;
        while (after[r] == before[r]) ++r;
        if (r == q.size()) q.emplace_back();
        q[r].push_back(l.top);
    }
    return {p, Tableau::straight(std::move(q))};
}

RskPair rsk_tilde(const BurgeWord& w) { return insert_letters(w.letters()); }

BurgeWord rsk_tilde_inverse(const RskPair& pq) { return BurgeWord(uninsert(pq, true)); }

Biword row_tuple_to_biword(const TableauTuple& t) {
    if (t.kind() != TupleKind::rows) throw InvalidArgument("row_tuple_to_biword needs a row tuple");
    std::vector<BiLetter> letters;
    for (std::size_t i = 0; i < t.members().size(); ++i)
        for (int x : t.entries(i)) letters.push_back({static_cast<int>(i) + 1, x});
    return Biword(std::move(letters));
}

TableauTuple biword_to_row_tuple(const Biword& w) {
    std::vector<std::vector<int>> lists;
    for (const auto& l : w.letters()) {
        if (static_cast<std::size_t>(l.top) > lists.size()) lists.resize(static_cast<std::size_t>(l.top));
        lists[static_cast<std::size_t>(l.top - 1)].push_back(l.bottom);
    }
    return TableauTuple::from_lists(TupleKind::rows, lists);
}

BurgeWord column_tuple_to_burge(const TableauTuple& t) {
    if (t.kind() != TupleKind::columns) throw InvalidArgument("column_tuple_to_burge needs a column tuple");
    std::vector<BiLetter> letters;
    for (std::size_t i = 0; i < t.members().size(); ++i) {
        auto col = t.entries(i);
        for (auto it = col.rbegin(); it != col.rend(); ++it) letters.push_back({static_cast<int>(i) + 1, *it});
    }
    return BurgeWord(std::move(letters));
}

TableauTuple burge_to_column_tuple(const BurgeWord& w) {
    std::vector<std::vector<int>> lists;
    for (const auto& l : w.letters()) {
        if (static_cast<std::size_t>(l.top) > lists.size()) lists.resize(static_cast<std::size_t>(l.top));
        lists[static_cast<std::size_t>(l.top - 1)].push_back(l.bottom);
    }
    for (auto& list : lists) std::reverse(list.begin(), list.end());
    return TableauTuple::from_lists(TupleKind::columns, lists);
}

Tableau subtableau(const Tableau& q, int i) {
    if (i < 1) throw InvalidArgument("subtableau index must be positive");
    const int lo = 2 * i - 1;
    const int hi = 2 * i;
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < q.rows().size(); ++r) {
        const auto& row = q.rows()[r];
        int below = 0, within = 0;
        std::vector<int> kept;
        for (int v : row) {
            if (v < lo) {
                ++below;
            } else if (v <= hi) {
                ++within;
                kept.push_back(v);
            }
        }
        int base = q.inner()[r];
        inner.push_back(base + below);
        outer.push_back(base + below + within);
        rows.push_back(std::move(kept));
    }
    while (!outer.empty() && outer.back() == 0) {
        outer.pop_back();
        inner.pop_back();
        rows.pop_back();
    }
    return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

namespace {

std::vector<BiLetter> pair_letters(const TableauTuple& t, int i, bool column_order) {
    if (i < 1 || static_cast<std::size_t>(2 * i) > t.members().size())
        throw InvalidArgument("tuple has no members " + std::to_string(2 * i - 1) + " and " + std::to_string(2 * i));
    std::vector<BiLetter> letters;
    for (int k : {2 * i - 1, 2 * i}) {
        auto entries = t.entries(static_cast<std::size_t>(k - 1));
        if (column_order) std::reverse(entries.begin(), entries.end());
        for (int x : entries) letters.push_back({k, x});
    }
    return letters;
}

} // namespace

RskPair sub_biword_rsk(const TableauTuple& t, int i) {
    if (t.kind() != TupleKind::rows) throw InvalidArgument("sub_biword_rsk needs a row tuple");
    return rsk(Biword(pair_letters(t, i, false)));
}

RskPair sub_burge_rsk(const TableauTuple& t, int i) {
    if (t.kind() != TupleKind::columns) throw InvalidArgument("sub_burge_rsk needs a column tuple");
    return rsk_tilde(BurgeWord(pair_letters(t, i, true)));
}

} // namespace plethyx
