#include "plethyx/jdt.hpp"

#include <algorithm>
#include <string>

#include "plethyx/error.hpp"

namespace plethyx {

namespace {

// Mutable working copy of a skew tableau: full-width rows with inner cells
// left unused, plus the current inner row lengths.
struct Grid {
    std::vector<std::vector<int>> rows;
    std::vector<int> inner;

    explicit Grid(const Tableau& t) {
        const auto& outer = t.outer();
        rows.resize(outer.length());
        inner.resize(outer.length(), 0);
        for (std::size_t r = 0; r < outer.length(); ++r) {
            inner[r] = t.inner()[r];
            rows[r].assign(static_cast<std::size_t>(inner[r]), 0);
            rows[r].insert(rows[r].end(), t.rows()[r].begin(), t.rows()[r].end());
        }
    }

    int len(std::size_t r) const { return r < rows.size() ? static_cast<int>(rows[r].size()) : 0; }
    int inner_at(std::size_t r) const { return r < inner.size() ? inner[r] : 0; }

    bool filled(int r, int c) const {
        if (r < 0 || c < 0) return false;
        auto ru = static_cast<std::size_t>(r);
        return c < len(ru) && c >= inner_at(ru);
    }

    bool is_corner(Cell cell) const {
        if (cell.row < 0 || cell.col < 0) return false;
        auto r = static_cast<std::size_t>(cell.row);
        return cell.col == inner_at(r) - 1 && inner_at(r + 1) <= cell.col;
    }

    std::vector<Cell> corners() const {
        std::vector<Cell> out;
        for (std::size_t r = 0; r < inner.size(); ++r)
            if (inner[r] > 0 && inner_at(r + 1) < inner[r]) out.push_back({static_cast<int>(r), inner[r] - 1});
        return out;
    }

    bool straight() const {
        return std::all_of(inner.begin(), inner.end(), [](int v) { return v == 0; });
    }

    // Caller guarantees `corner` is an inner corner.
    void slide(Cell corner, std::vector<Cell>* path) {
        int r = corner.row;
        int c = corner.col;
        --inner[static_cast<std::size_t>(r)];
        if (path) path->push_back({r, c});
        for (;;) {
            bool east = filled(r, c + 1);
            bool south = filled(r + 1, c);
            auto ru = static_cast<std::size_t>(r);
            auto cu = static_cast<std::size_t>(c);
            if (south && (!east || rows[ru + 1][cu] <= rows[ru][cu + 1])) {
                rows[ru][cu] = rows[ru + 1][cu];
                ++r;
            } else if (east) {
                rows[ru][cu] = rows[ru][cu + 1];
                ++c;
            } else {
                break;
            }
            if (path) path->push_back({r, c});
        }
        // The hole sits at the end of its row on the outer border.
        rows[static_cast<std::size_t>(r)].pop_back();
        while (!rows.empty() && rows.back().empty()) {
            rows.pop_back();
            inner.pop_back();
        }
    }

    Tableau to_tableau() const {
        std::vector<int> outer_parts;
        std::vector<std::vector<int>> entries(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            outer_parts.push_back(len(r));
            entries[r].assign(rows[r].begin() + inner[r], rows[r].end());
        }
        return Tableau(SkewShape(Partition(outer_parts), Partition(inner)), std::move(entries));
    }

    Partition outer_shape() const {
        std::vector<int> parts;
        for (std::size_t r = 0; r < rows.size(); ++r) parts.push_back(len(r));
        return Partition(parts);
    }
};

std::string cell_str(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

void rectify_in_place(Grid& g, const CornerPolicy* pick) {
    while (!g.straight()) {
        if (pick) {
            auto corners = g.corners();
            std::size_t k = (*pick)(corners);
            if (k >= corners.size()) throw InvalidArgument("corner policy returned an out-of-range index");
            g.slide(corners[k], nullptr);
        } else {
            std::size_t r = g.inner.size();
            while (r > 0 && g.inner[r - 1] == 0) --r;
            g.slide({static_cast<int>(r - 1), g.inner[r - 1] - 1}, nullptr);
        }
    }
}

} // namespace

std::vector<Cell> inner_corners(const SkewShape& s) {
    std::vector<Cell> out;
    const auto& inner = s.inner();
    for (std::size_t r = 0; r < inner.length(); ++r)
        if (inner[r + 1] < inner[r]) out.push_back({static_cast<int>(r), inner[r] - 1});
    return out;
}

SlideTrace jdt_slide_traced(const Tableau& t, Cell corner) {
    Grid g(t);
    if (!g.is_corner(corner)) throw InvalidCorner("cell " + cell_str(corner) + " is not an inner corner");
    SlideTrace trace{corner, {}, {}};
    g.slide(corner, &trace.path);
    trace.result = g.to_tableau();
    return trace;
}

Tableau jdt_slide(const Tableau& t, Cell corner) { return jdt_slide_traced(t, corner).result; }

Tableau rectify(const Tableau& t) {
    if (t.shape().is_straight()) return t;
    Grid g(t);
    rectify_in_place(g, nullptr);
    return g.to_tableau();
}

Tableau rectify(const Tableau& t, const CornerPolicy& pick) {
    Grid g(t);
    rectify_in_place(g, &pick);
    return g.to_tableau();
}

std::vector<SlideTrace> rectify_traced(const Tableau& t) {
    std::vector<SlideTrace> out;
    Tableau cur = t;
    while (!cur.shape().is_straight()) {
        auto corners = inner_corners(cur.shape());
        out.push_back(jdt_slide_traced(cur, corners.back()));
        cur = out.back().result;
    }
    return out;
}

Partition rectified_shape(const Tableau& t) {
    Grid g(t);
    rectify_in_place(g, nullptr);
    return g.outer_shape();
}

Tableau star_product(const Tableau& t1, const Tableau& t2) {
    if (!t1.shape().is_straight() || !t2.shape().is_straight())
        throw InvalidArgument("star_product operands must have straight shape");
    if (t1.empty()) return t2;
    if (t2.empty()) return t1;
    const Partition& mu = t1.outer();
    const Partition& nu = t2.outer();
    const int m = mu[0];
    std::vector<int> outer;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < nu.length(); ++i) {
        outer.push_back(m + nu[i]);
        rows.push_back(t2.rows()[i]);
    }
    for (std::size_t i = 0; i < mu.length(); ++i) {
        outer.push_back(mu[i]);
        rows.push_back(t1.rows()[i]);
    }
    Partition inner(std::vector<int>(nu.length(), m));
    return Tableau(SkewShape(Partition(outer), std::move(inner)), std::move(rows));
}

Tableau product(const Tableau& t1, const Tableau& t2) { return rectify(star_product(t1, t2)); }

} // namespace plethyx
