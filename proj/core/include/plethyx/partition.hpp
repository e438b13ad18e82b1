#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace plethyx {

/// Integer partition stored in canonical form: weakly decreasing positive
/// parts, no trailing zeros. The empty partition is the partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Trailing zeros are stripped; negative or increasing parts throw InvalidArgument.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;

    /// Part i (0-indexed); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// True if this diagram contains `other` cellwise.
    bool contains(const Partition& other) const noexcept;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// Transposed diagram.
Partition conjugate(const Partition& p);

/// Each part repeated twice: (2,1) -> (2,2,1,1).
Partition doubled(const Partition& p);

/// (2^a, 1^b).
Partition two_column_hook(int twos, int ones);

/// All partitions of n, lexicographically largest first.
std::vector<Partition> partitions_of(int n);

/// All partitions with size at most n, grouped by size, each group largest first.
std::vector<Partition> partitions_up_to(int n);

/// Partitions contained in `outer` (cellwise), lexicographically largest first.
std::vector<Partition> subpartitions(const Partition& outer);

/// Weak composition: entry i counts letter i+1. Equality ignores trailing zeros.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> counts);
    explicit Composition(std::vector<int> counts);
    explicit Composition(const Partition& p);

    const std::vector<int>& counts() const noexcept { return counts_; }
    /// Largest letter index that may occur (trailing zeros included).
    std::size_t letters() const noexcept { return counts_.size(); }
    int total() const noexcept;
    int operator[](std::size_t i) const noexcept { return i < counts_.size() ? counts_[i] : 0; }

    bool operator==(const Composition& other) const noexcept;

    std::string to_string() const;

private:
    std::vector<int> counts_;
};

Composition operator+(const Composition& a, const Composition& b);

/// Cell coordinates, 0-indexed, row then column.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {});

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    bool is_straight() const noexcept { return inner_.empty(); }
    int size() const noexcept { return outer_.size() - inner_.size(); }
    /// True if (row, col) is a cell of outer/inner.
    bool contains(Cell c) const noexcept;

    auto operator<=>(const SkewShape&) const = default;
    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

} // namespace plethyx

template <>
struct std::hash<plethyx::Partition> : plethyx::PartitionHash {};
