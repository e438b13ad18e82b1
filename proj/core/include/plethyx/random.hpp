#pragma once

#include <cstdint>
#include <random>

#include "plethyx/rsk.hpp"
#include "plethyx/tableau.hpp"

namespace plethyx {

using Rng = std::mt19937_64;

/// Generator for item `index` of a run seeded with `seed`; items are
/// independent of each other and of evaluation order.
Rng item_rng(std::uint64_t seed, std::uint64_t index);

/// Partition with at most max_size cells (possibly empty).
Partition random_partition(Rng& rng, int max_size);

/// Skew shape outer/inner with 1..max_cells cells and a random semistandard
/// filling whose entries stay within 1..max_entry where possible.
Tableau random_skew_tableau(Rng& rng, int max_cells, int max_entry);
Tableau random_straight_tableau(Rng& rng, int max_cells, int max_entry);

/// Biword with 1..max_length letters over [1, alphabet]^2, sorted lexicographically.
Biword random_biword(Rng& rng, int max_length, int alphabet);

/// Burge word with 1..max_length distinct letters over [1, alphabet]^2.
BurgeWord random_burge_word(Rng& rng, int max_length, int alphabet);

/// Tuple of rows (or columns) with the given sizes and entries in [1, alphabet].
/// Columns need alphabet >= every size.
TableauTuple random_tuple(Rng& rng, TupleKind kind, const std::vector<int>& sizes, int alphabet);

} // namespace plethyx
