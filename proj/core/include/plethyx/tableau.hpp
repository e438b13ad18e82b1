#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plethyx/partition.hpp"

namespace plethyx {

/// A filling of a (possibly skew) shape with positive integers.
///
/// `rows()[r]` lists the entries of row r from column inner[r] to
/// outer[r]-1, so a fully-inner row is an empty list. The filling is not
/// required to be semistandard: conjugate (row-strict) tableaux and
/// intermediate objects share this type, and the validators below decide
/// which condition holds.
class Tableau {
public:
    Tableau() = default;
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

    /// Straight-shape tableau; row lengths must form a partition.
    static Tableau straight(std::vector<std::vector<int>> rows);

    const SkewShape& shape() const noexcept { return shape_; }
    const Partition& outer() const noexcept { return shape_.outer(); }
    const Partition& inner() const noexcept { return shape_.inner(); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    int cell_count() const noexcept { return shape_.size(); }
    bool empty() const noexcept { return cell_count() == 0; }

    /// Entry at a filled cell, or nullopt for inner/outside cells.
    std::optional<int> find(Cell c) const noexcept;
    /// Entry at a filled cell; throws InvalidArgument otherwise.
    int at(Cell c) const;

    /// Filled cells in row-major order.
    std::vector<Cell> cells() const;

    /// Rows weakly increase, columns strictly increase.
    bool is_semistandard() const noexcept;

    bool operator==(const Tableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Rows strictly increase, columns weakly increase (the transpose is semistandard).
bool is_conjugate_semistandard(const Tableau& t) noexcept;

/// Reflection along the main diagonal; shape becomes outer'/inner'.
Tableau conjugate(const Tableau& t);

Composition content(const Tableau& t);

/// Rows bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

enum class TupleKind { rows, columns };

/// Tuple of one-row or one-column straight tableaux whose sizes follow `profile`.
class TableauTuple {
public:
    TableauTuple() = default;
    TableauTuple(TupleKind kind, std::vector<Tableau> members);

    /// Members given as entry lists: a row tableau left to right, or a column top to bottom.
    static TableauTuple from_lists(TupleKind kind, const std::vector<std::vector<int>>& lists);

    TupleKind kind() const noexcept { return kind_; }
    const std::vector<Tableau>& members() const noexcept { return members_; }
    /// Member sizes. Not required to be weakly decreasing, since the tuples
    /// built from lambda^2 are, but arbitrary tuples need not be.
    const std::vector<int>& profile() const noexcept { return profile_; }
    /// Entries of member i in reading order of the member (left to right / top to bottom).
    std::vector<int> entries(std::size_t i) const;

    bool operator==(const TableauTuple&) const = default;

private:
    TupleKind kind_ = TupleKind::rows;
    std::vector<Tableau> members_;
    std::vector<int> profile_;
};

Composition content(const TableauTuple& t);

/// Concatenation of member reading words.
std::vector<int> reading_word(const TableauTuple& t);

/// Visit every semistandard filling of `shape` with the given content, in
/// lexicographic order of the row-major entry sequence. Returning false
/// from the visitor stops the enumeration.
void for_each_ssyt(const SkewShape& shape, const Composition& content,
                   const std::function<bool(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const Composition& content);

/// Number of semistandard fillings of the shape with the given content.
std::uint64_t kostka(const SkewShape& shape, const Composition& content);
std::uint64_t kostka(const Partition& shape, const Composition& content);

} // namespace plethyx
