#include "plethyx/domino.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "plethyx/error.hpp"
#include "plethyx/parallel.hpp"

namespace plethyx {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

using Grid = std::vector<std::vector<std::size_t>>;

Grid empty_grid(const Partition& shape) {
    Grid g;
    for (int len : shape.parts()) g.emplace_back(static_cast<std::size_t>(len), kFree);
    return g;
}

bool inside(const Partition& shape, Cell c) {
    return c.row >= 0 && c.col >= 0 && static_cast<std::size_t>(c.row) < shape.length() &&
           c.col < shape[static_cast<std::size_t>(c.row)];
}

// Tilings as domino lists ordered by first cell, entries left at 0.
void tile_rec(const Partition& shape, Grid& grid, std::vector<Domino>& cur, std::vector<std::vector<Domino>>& out) {
    Cell hole{-1, -1};
    for (std::size_t r = 0; r < grid.size() && hole.row < 0; ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            if (grid[r][c] == kFree) {
                hole = {static_cast<int>(r), static_cast<int>(c)};
                break;
            }
    if (hole.row < 0) {
        out.push_back(cur);
        return;
    }
    auto& at = grid[static_cast<std::size_t>(hole.row)];
    const std::size_t id = cur.size();
    const auto hc = static_cast<std::size_t>(hole.col);
    const Cell down{hole.row + 1, hole.col};
    if (inside(shape, down) && grid[static_cast<std::size_t>(down.row)][hc] == kFree) {
        at[hc] = grid[static_cast<std::size_t>(down.row)][hc] = id;
        cur.push_back({hole, down, 0, Orientation::vertical});
        tile_rec(shape, grid, cur, out);
        cur.pop_back();
        at[hc] = grid[static_cast<std::size_t>(down.row)][hc] = kFree;
    }
    const Cell right{hole.row, hole.col + 1};
    if (inside(shape, right) && at[hc + 1] == kFree) {
        at[hc] = at[hc + 1] = id;
        cur.push_back({hole, right, 0, Orientation::horizontal});
        tile_rec(shape, grid, cur, out);
        cur.pop_back();
        at[hc] = at[hc + 1] = kFree;
    }
}

std::vector<std::vector<Domino>> tilings(const Partition& shape) {
    Grid grid = empty_grid(shape);
    std::vector<Domino> cur;
    std::vector<std::vector<Domino>> out;
    if (shape.size() % 2 == 0) tile_rec(shape, grid, cur, out);
    return out;
}

// Backtracking filler over a fixed tiling. Entries are assigned in `order`;
// each new entry is checked against every already-filled neighbour cell.
class Filler {
public:
    Filler(const Partition& shape, std::vector<Domino> tiling, int max_entry, bool yamanouchi)
        : shape_(shape), dominoes_(std::move(tiling)), grid_(empty_grid(shape)), max_entry_(max_entry),
          yamanouchi_(yamanouchi), counts_(static_cast<std::size_t>(max_entry) + 2, 0) {
        for (std::size_t k = 0; k < dominoes_.size(); ++k) {
            grid_[static_cast<std::size_t>(dominoes_[k].first.row)][static_cast<std::size_t>(dominoes_[k].first.col)] = k;
            grid_[static_cast<std::size_t>(dominoes_[k].second.row)][static_cast<std::size_t>(dominoes_[k].second.col)] = k;
            order_.push_back(k);
        }
        if (yamanouchi_) {
            // Reverse reading order of the cell at which each domino is read.
            auto key = [&](std::size_t k) {
                const Domino& d = dominoes_[k];
                Cell read = d.orientation == Orientation::vertical ? d.second : d.first;
                return std::make_pair(read.row, -read.col);
            };
            std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        }
    }

    std::vector<DominoTableau> run() {
        fill(0);
        return std::move(out_);
    }

private:
    int value(Cell c) const {
        if (!inside(shape_, c)) return -1;
        return dominoes_[grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)]].entry;
    }

    std::size_t owner(Cell c) const {
        return grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
    }

    bool fits(std::size_t k, int v) const {
        for (Cell c : {dominoes_[k].first, dominoes_[k].second}) {
            const Cell left{c.row, c.col - 1}, right{c.row, c.col + 1}, up{c.row - 1, c.col}, down{c.row + 1, c.col};
            if (int w = value(left); w > 0 && owner(left) != k && w > v) return false;
            if (int w = value(right); w > 0 && owner(right) != k && w < v) return false;
            if (int w = value(up); w > 0 && owner(up) != k && w >= v) return false;
            if (int w = value(down); w > 0 && owner(down) != k && w <= v) return false;
        }
        return true;
    }

    void fill(std::size_t step) {
        if (step == order_.size()) {
            out_.emplace_back(shape_, dominoes_);
            return;
        }
        const std::size_t k = order_[step];
        for (int v = 1; v <= max_entry_; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (yamanouchi_ && v > 1 && counts_[uv] + 1 > counts_[uv - 1]) continue;
            if (!fits(k, v)) continue;
            dominoes_[k].entry = v;
            ++counts_[uv];
            fill(step + 1);
            --counts_[uv];
            dominoes_[k].entry = 0;
        }
    }

    const Partition& shape_;
    std::vector<Domino> dominoes_;
    Grid grid_;
    int max_entry_;
    bool yamanouchi_;
    std::vector<int> counts_;
    std::vector<std::size_t> order_;
    std::vector<DominoTableau> out_;
};

std::vector<DominoTableau> enumerate(const Partition& shape, int max_entry, bool yamanouchi, unsigned threads) {
    if (shape.size() % 2 != 0) throw InvalidArgument("domino shape (" + shape.to_string() + ") has odd size");
    if (max_entry < 0) throw InvalidArgument("max_entry must be positive");
    if (max_entry == 0) max_entry = shape.size() / 2;
    const auto all = tilings(shape);
    auto per_tiling = parallel_map(all.size(), threads,
                                   [&](std::size_t k) { return Filler(shape, all[k], max_entry, yamanouchi).run(); });
    std::vector<DominoTableau> out;
    for (auto& group : per_tiling)
        for (auto& d : group) out.push_back(std::move(d));
    return out;
}

} // namespace

DominoTableau::DominoTableau(Partition shape, std::vector<Domino> dominoes)
    : shape_(std::move(shape)), dominoes_(std::move(dominoes)), owner_(empty_grid(shape_)) {
    std::sort(dominoes_.begin(), dominoes_.end(),
              [](const Domino& a, const Domino& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < dominoes_.size(); ++k) {
        const Domino& d = dominoes_[k];
        if (d.entry < 1) throw InvalidArgument("domino entries must be positive");
        const Cell expect = d.orientation == Orientation::horizontal ? Cell{d.first.row, d.first.col + 1}
                                                                     : Cell{d.first.row + 1, d.first.col};
        if (d.second != expect) throw InvalidArgument("domino cells do not match its orientation");
        for (Cell c : {d.first, d.second}) {
            if (!inside(shape_, c)) throw InvalidArgument("domino leaves the shape");
            auto& slot = owner_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
            if (slot != kFree) throw InvalidArgument("dominoes overlap");
            slot = k;
        }
    }
    for (const auto& row : owner_)
        for (std::size_t id : row)
            if (id == kFree) throw InvalidArgument("dominoes do not cover the shape");
    for (std::size_t r = 0; r < owner_.size(); ++r) {
        for (std::size_t c = 0; c < owner_[r].size(); ++c) {
            const int v = dominoes_[owner_[r][c]].entry;
            if (c + 1 < owner_[r].size() && v > dominoes_[owner_[r][c + 1]].entry)
                throw InvalidArgument("domino entries decrease along a row");
            if (r + 1 < owner_.size() && c < owner_[r + 1].size() && owner_[r + 1][c] != owner_[r][c] &&
                v >= dominoes_[owner_[r + 1][c]].entry)
                throw InvalidArgument("domino entries do not increase down a column");
        }
    }
}

std::size_t DominoTableau::owner(Cell c) const {
    if (!inside(shape_, c)) throw InvalidArgument("cell outside the domino tableau");
    return owner_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
}

int DominoTableau::vertical_count() const noexcept {
    return static_cast<int>(std::count_if(dominoes_.begin(), dominoes_.end(),
                                          [](const Domino& d) { return d.orientation == Orientation::vertical; }));
}

std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& shape, int max_entry, unsigned threads) {
    return enumerate(shape, max_entry, false, threads);
}

std::vector<DominoTableau> enumerate_yamanouchi_domino_tableaux(const Partition& shape, unsigned threads) {
    return enumerate(shape, 0, true, threads);
}

std::vector<int> domino_reading_word(const DominoTableau& d) {
    std::vector<int> word;
    std::vector<bool> seen(d.dominoes().size(), false);
    const auto& shape = d.shape();
    for (int r = static_cast<int>(shape.length()) - 1; r >= 0; --r) {
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) {
            const std::size_t k = d.owner({r, c});
            if (seen[k]) continue;
            seen[k] = true;
            word.push_back(d.dominoes()[k].entry);
        }
    }
    return word;
}

bool is_yamanouchi(const std::vector<int>& word) {
    std::vector<int> counts;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 1) return false;
        const auto v = static_cast<std::size_t>(*it);
        if (counts.size() < v + 1) counts.resize(v + 1, 0);
        ++counts[v];
        if (v > 1 && counts[v] > counts[v - 1]) return false;
    }
    return true;
}

int max_vertical_dominoes(const Partition& shape) {
    const auto all = tilings(shape);
    if (all.empty()) throw InvalidArgument("shape (" + shape.to_string() + ") admits no domino tiling");
    int best = 0;
    for (const auto& t : all) {
        int v = static_cast<int>(std::count_if(t.begin(), t.end(), [](const Domino& d) {
            return d.orientation == Orientation::vertical;
        }));
        best = std::max(best, v);
    }
    return best;
}

int cospin(const DominoTableau& d) {
    const int gap = max_vertical_dominoes(d.shape()) - d.vertical_count();
    if (gap < 0 || gap % 2 != 0) throw InternalError("vertical domino count has the wrong parity");
    return gap / 2;
}

Composition weight(const DominoTableau& d) {
    std::vector<int> counts;
    for (const auto& dom : d.dominoes()) {
        const auto v = static_cast<std::size_t>(dom.entry);
        if (counts.size() < v) counts.resize(v, 0);
        ++counts[v - 1];
    }
    return Composition(std::move(counts));
}

SignedKostkaTable littlewood_via_domino(int n, Basis basis, unsigned threads) {
    if (n < 1) throw InvalidArgument("littlewood_via_domino: n must be positive");
    const Partition shape = basis == Basis::h ? Partition{2 * n, 2 * n} : two_column_hook(2 * n, 0);
    const int max_vertical = max_vertical_dominoes(shape);
    SignedKostkaTable table{basis, Partition{n}, {}, {}};
    for (const auto& d : enumerate_yamanouchi_domino_tableaux(shape, threads)) {
        const int gap = max_vertical - d.vertical_count();
        if (gap % 2 != 0) throw InternalError("vertical domino count has the wrong parity");
        auto& c = table.entries[Partition(weight(d).counts())];
        ((gap / 2) % 2 == 0 ? c.k_plus : c.k_minus) += 1;
    }
    return table;
}

std::string render_ascii(const DominoTableau& d) {
    const auto& shape = d.shape();
    const int rows = static_cast<int>(shape.length());
    auto has = [&](int r, int c) { return inside(shape, {r, c}); };
    auto same = [&](Cell a, Cell b) { return has(a.row, a.col) && has(b.row, b.col) && d.owner(a) == d.owner(b); };
    std::ostringstream os;
    for (int r = 0; r <= rows; ++r) {
        // Horizontal wall above row r.
        const int above = r > 0 ? shape[static_cast<std::size_t>(r - 1)] : 0;
        const int span = std::max(above, shape[static_cast<std::size_t>(r)]);
        for (int c = 0; c < span; ++c) {
            os << '+';
            os << (same({r - 1, c}, {r, c}) ? "   " : "---");
        }
        if (span > 0) os << "+\n";
        if (r == rows) break;
        const int len = shape[static_cast<std::size_t>(r)];
        for (int c = 0; c < len; ++c) {
            os << (c == 0 || !same({r, c - 1}, {r, c}) ? '|' : ' ');
            const auto& dom = d.dominoes()[d.owner({r, c})];
            if (dom.first == Cell{r, c}) {
                std::string label = std::to_string(dom.entry);
                if (label.size() == 1) label = " " + label + " ";
                else if (label.size() == 2) label = label + " ";
                os << label;
            } else {
                os << "   ";
            }
        }
        os << "|\n";
    }
    return os.str();
}

} // namespace plethyx
