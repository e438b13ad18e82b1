#pragma once

#include <compare>
#include <span>
#include <vector>

#include "plethyx/tableau.hpp"

namespace plethyx {

/// A bi-letter (top over bottom).
struct BiLetter {
    int top = 0;
    int bottom = 0;
    auto operator<=>(const BiLetter&) const = default;
};

/// Lexicographically ordered two-line array: tops weakly increase and,
/// for equal tops, bottoms weakly increase. Throws MalformedBiword otherwise.
class Biword {
public:
    Biword() = default;
    explicit Biword(std::vector<BiLetter> letters);
    Biword(std::span<const int> top, std::span<const int> bottom);

    const std::vector<BiLetter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::vector<int> top_word() const;
    std::vector<int> bottom_word() const;

    bool operator==(const Biword&) const = default;

private:
    std::vector<BiLetter> letters_;
};

/// Two-line array with tops weakly increasing and, for equal tops, bottoms
/// strictly decreasing (so no bi-letter repeats).
class BurgeWord {
public:
    BurgeWord() = default;
    explicit BurgeWord(std::vector<BiLetter> letters);
    BurgeWord(std::span<const int> top, std::span<const int> bottom);

    const std::vector<BiLetter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::vector<int> top_word() const;
    std::vector<int> bottom_word() const;

    bool operator==(const BurgeWord&) const = default;

private:
    std::vector<BiLetter> letters_;
};

/// Insertion tableau p and recording tableau q of equal shape.
struct RskPair {
    Tableau p;
    Tableau q;
    bool operator==(const RskPair&) const = default;
};

/// Row insertion of a word (the P-tableau of the word).
Tableau insert_word(std::span<const int> word);

/// Row-insert the bottom word, recording each new cell with its top letter.
RskPair rsk(const Biword& w);
/// Reverse bumping, always removing the rightmost occurrence of the largest recording entry.
Biword rsk_inverse(const RskPair& pq);

/// RSK with each insertion tableau computed as rect(P * [v]) instead of bumping.
RskPair rsk_via_product(const Biword& w);

/// Row insertion of a Burge word; the recording object is conjugate-semistandard.
RskPair rsk_tilde(const BurgeWord& w);
/// Reverse bumping, always removing the lowest occurrence of the largest recording entry.
BurgeWord rsk_tilde_inverse(const RskPair& pq);

/// Bi-letter (i, x) for each entry x of the i-th member (1-based), members in order.
Biword row_tuple_to_biword(const TableauTuple& t);
/// Inverse of row_tuple_to_biword; member i collects the bottoms with top i
/// (members for absent top letters are empty).
TableauTuple biword_to_row_tuple(const Biword& w);

/// Bi-letter (i, x) for each entry of the i-th column, read bottom to top.
BurgeWord column_tuple_to_burge(const TableauTuple& t);
TableauTuple burge_to_column_tuple(const BurgeWord& w);

/// Cells of q holding 2i-1 or 2i, with entries unchanged. The inner shape is
/// q's own inner shape together with the cells holding entries below 2i-1.
/// Valid for semistandard and conjugate-semistandard q.
Tableau subtableau(const Tableau& q, int i);

/// RSK of the sub-biword of row_tuple_to_biword(t) with tops 2i-1 and 2i.
RskPair sub_biword_rsk(const TableauTuple& t, int i);
/// RSK~ of the sub-Burge-word of column_tuple_to_burge(t) with tops 2i-1 and 2i.
RskPair sub_burge_rsk(const TableauTuple& t, int i);

} // namespace plethyx
