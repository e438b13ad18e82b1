#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "plethyx/domino.hpp"
#include "plethyx/tableau.hpp"

namespace oracle {

using plethyx::Partition;

// p(n) by Euler's pentagonal recurrence.
inline std::int64_t partition_count(int n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            int sign = (k % 2) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

// Column lengths read off the diagram.
inline std::vector<int> column_lengths(const std::vector<int>& rows) {
    std::vector<int> cols;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c) {
            if (static_cast<std::size_t>(c) >= cols.size()) cols.push_back(0);
            ++cols[static_cast<std::size_t>(c)];
        }
    return cols;
}

// Standard Young tableaux count by the hook length formula.
inline std::uint64_t hook_length_count(const Partition& shape) {
    auto cols = column_lengths(shape.parts());
    std::uint64_t num = 1, den = 1;
    for (int k = 2; k <= shape.size(); ++k) num *= static_cast<std::uint64_t>(k);
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            den *= static_cast<std::uint64_t>(shape[r] - c + cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1);
    return num / den;
}

struct Cell {
    int row, col;
};

inline std::vector<Cell> skew_cells(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < outer.size(); ++r)
        for (int c = r < inner.size() ? inner[r] : 0; c < outer[r]; ++c) cells.push_back({static_cast<int>(r), c});
    return cells;
}

// Every assignment of 1..letters to the cells, kept when semistandard with the
// given content. Returned as row lists (skew rows start at the inner edge).
inline std::vector<std::vector<std::vector<int>>> all_ssyt(const std::vector<int>& outer, const std::vector<int>& inner,
                                                           const std::vector<int>& content) {
    const auto cells = skew_cells(outer, inner);
    const int letters = static_cast<int>(content.size());
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> values(cells.size(), 1);
    if (letters == 0) {
        if (cells.empty()) out.push_back(std::vector<std::vector<int>>(outer.size()));
        return out;
    }
    auto value_at = [&](int r, int c) -> int {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k].row == r && cells[k].col == c) return values[k];
        return 0;
    };
    while (true) {
        std::vector<int> counts(content.size(), 0);
        for (int v : values) ++counts[static_cast<std::size_t>(v - 1)];
        bool ok = counts == content;
        for (std::size_t k = 0; ok && k < cells.size(); ++k) {
            int left = value_at(cells[k].row, cells[k].col - 1);
            int up = value_at(cells[k].row - 1, cells[k].col);
            if (left && left > values[k]) ok = false;
            if (up && up >= values[k]) ok = false;
        }
        if (ok) {
            std::vector<std::vector<int>> rows(outer.size());
            for (std::size_t k = 0; k < cells.size(); ++k) rows[static_cast<std::size_t>(cells[k].row)].push_back(values[k]);
            out.push_back(rows);
        }
        std::size_t k = 0;
        while (k < values.size() && values[k] == letters) values[k++] = 1;
        if (k == values.size()) break;
        ++values[k];
    }
    return out;
}

// Domino tableaux by an independent route: tile column-major from the first
// free cell, then try every filling and test it cell by cell.
struct BruteDomino {
    std::vector<std::pair<Cell, Cell>> pieces;
    std::vector<int> entries;
};

inline std::vector<BruteDomino> all_domino_tableaux(const std::vector<int>& shape, int max_entry) {
    std::vector<std::vector<int>> owner;
    for (int len : shape) owner.emplace_back(static_cast<std::size_t>(len), -1);
    auto inside = [&](int r, int c) {
        return r >= 0 && c >= 0 && static_cast<std::size_t>(r) < shape.size() && c < shape[static_cast<std::size_t>(r)];
    };
    std::vector<std::vector<std::pair<Cell, Cell>>> tilings;
    std::vector<std::pair<Cell, Cell>> cur;
    std::function<void()> tile = [&] {
        int width = shape.empty() ? 0 : shape[0];
        for (int c = 0; c < width; ++c)
            for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
                if (!inside(r, c) || owner[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] >= 0) continue;
                const int id = static_cast<int>(cur.size());
                for (auto [dr, dc] : {std::pair{1, 0}, std::pair{0, 1}}) {
                    int r2 = r + dr, c2 = c + dc;
                    if (!inside(r2, c2) || owner[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] >= 0) continue;
                    owner[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = id;
                    owner[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] = id;
                    cur.push_back({{r, c}, {r2, c2}});
                    tile();
                    cur.pop_back();
                    owner[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
                    owner[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] = -1;
                }
                return;
            }
        tilings.push_back(cur);
    };
    tile();

    std::vector<BruteDomino> out;
    for (const auto& t : tilings) {
        std::vector<int> e(t.size(), 1);
        while (true) {
            std::vector<std::vector<int>> grid, id;
            for (int len : shape) {
                grid.emplace_back(static_cast<std::size_t>(len), 0);
                id.emplace_back(static_cast<std::size_t>(len), 0);
            }
            for (std::size_t k = 0; k < t.size(); ++k)
                for (Cell c : {t[k].first, t[k].second}) {
                    grid[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = e[k];
                    id[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = static_cast<int>(k);
                }
            bool ok = true;
            for (int r = 0; ok && r < static_cast<int>(shape.size()); ++r)
                for (int c = 0; ok && c < shape[static_cast<std::size_t>(r)]; ++c) {
                    if (inside(r, c + 1) && grid[r][c] > grid[r][c + 1]) ok = false;
                    if (inside(r + 1, c) && id[r][c] != id[r + 1][c] && grid[r][c] >= grid[r + 1][c]) ok = false;
                }
            if (ok) out.push_back({t, e});
            std::size_t k = 0;
            while (k < e.size() && e[k] == max_entry) e[k++] = 1;
            if (k == e.size()) break;
            ++e[k];
        }
    }
    return out;
}

} // namespace oracle
