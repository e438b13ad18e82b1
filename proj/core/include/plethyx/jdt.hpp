#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "plethyx/tableau.hpp"

namespace plethyx {

/// Inner corners of a skew shape: cells of the inner partition whose east
/// and south neighbours are not in the inner partition. Ordered by row.
std::vector<Cell> inner_corners(const SkewShape& s);

/// One jeu de taquin slide and the path the empty cell travelled.
struct SlideTrace {
    Cell start_corner;
    std::vector<Cell> path; // starts at start_corner, ends on the outer border
    Tableau result;
};

/// Slide into the empty inner corner `corner`. Throws InvalidCorner if the
/// cell is not an inner corner of t's shape.
Tableau jdt_slide(const Tableau& t, Cell corner);
SlideTrace jdt_slide_traced(const Tableau& t, Cell corner);

/// Chooses the next corner (by index) among the current inner corners.
using CornerPolicy = std::function<std::size_t(std::span<const Cell>)>;

/// Rectify with the default order: the inner corner with the largest row index.
Tableau rectify(const Tableau& t);
Tableau rectify(const Tableau& t, const CornerPolicy& pick);
/// Rectify with the default order and keep every slide.
std::vector<SlideTrace> rectify_traced(const Tableau& t);

/// Shape of rect(t) without building intermediate Tableau values.
Partition rectified_shape(const Tableau& t);

/// t1 placed below and left of t2 in the skew shape
/// (m+n_1, ..., m+n_l, mu_1, ..., mu_k)/(m^l) with m = mu_1.
/// Both operands must have straight shape.
Tableau star_product(const Tableau& t1, const Tableau& t2);

/// rect(t1 * t2).
Tableau product(const Tableau& t1, const Tableau& t2);

} // namespace plethyx
