#pragma once

#include <string>
#include <vector>

#include "plethyx/partition.hpp"
#include "plethyx/sign.hpp"

namespace plethyx {

enum class Orientation { horizontal, vertical };

/// `first` is the left cell of a horizontal domino and the top cell of a
/// vertical one.
struct Domino {
    Cell first;
    Cell second;
    int entry = 0;
    Orientation orientation = Orientation::horizontal;

    bool operator==(const Domino&) const = default;
};

/// A tiling of a straight shape by dominoes carrying positive entries.
/// Rows weakly increase and columns strictly increase on the cell-expanded
/// array, except across the two cells of one vertical domino.
class DominoTableau {
public:
    DominoTableau() = default;
    /// Throws InvalidArgument unless the dominoes tile `shape` semistandardly.
    DominoTableau(Partition shape, std::vector<Domino> dominoes);

    const Partition& shape() const noexcept { return shape_; }
    /// Sorted by first cell, row-major.
    const std::vector<Domino>& dominoes() const noexcept { return dominoes_; }
    /// Index into dominoes() of the domino covering c.
    std::size_t owner(Cell c) const;
    int entry(Cell c) const { return dominoes_[owner(c)].entry; }
    int vertical_count() const noexcept;

    bool operator==(const DominoTableau& o) const { return shape_ == o.shape_ && dominoes_ == o.dominoes_; }

private:
    Partition shape_;
    std::vector<Domino> dominoes_;
    std::vector<std::vector<std::size_t>> owner_;
};

/// All tilings of `shape` with all semistandard fillings by 1..max_entry.
/// max_entry = 0 means |shape|/2. Output is grouped by tiling, in a fixed order.
std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& shape, int max_entry = 0, unsigned threads = 1);

/// Only the tableaux with a Yamanouchi reading word, filled in reverse
/// reading order so that every partial suffix stays a lattice word.
std::vector<DominoTableau> enumerate_yamanouchi_domino_tableaux(const Partition& shape, unsigned threads = 1);

/// Rows bottom to top, each left to right; a domino is read at the first of
/// its cells met in that scan.
std::vector<int> domino_reading_word(const DominoTableau& d);

/// Every suffix has weakly decreasing letter multiplicities.
bool is_yamanouchi(const std::vector<int>& word);

/// Maximum number of vertical dominoes over all tilings of the shape.
int max_vertical_dominoes(const Partition& shape);

/// (max_vertical_dominoes(shape) - vertical dominoes used) / 2.
int cospin(const DominoTableau& d);

/// Entry multiplicities; a partition when the tableau is Yamanouchi.
Composition weight(const DominoTableau& d);

/// Yamanouchi domino tableaux of shape (2n,2n) (h) or (2^{2n}) (e), weights
/// bucketed by cospin parity: even to k_plus, odd to k_minus.
SignedKostkaTable littlewood_via_domino(int n, Basis basis, unsigned threads = 1);

/// Box drawing with the inner wall of each domino left open.
std::string render_ascii(const DominoTableau& d);

} // namespace plethyx
