#include "plethyx/tableau.hpp"

#include <algorithm>
#include <string>

#include "plethyx/error.hpp"

namespace plethyx {

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    const auto& outer = shape_.outer();
    const auto& inner = shape_.inner();
    if (rows_.size() != outer.length())
        throw InvalidArgument("tableau has " + std::to_string(rows_.size()) + " rows but shape has " +
                              std::to_string(outer.length()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != outer[r] - inner[r])
            throw InvalidArgument("tableau row " + std::to_string(r) + " has wrong length");
        for (int v : rows_[r])
            if (v <= 0) throw InvalidArgument("tableau entries must be positive");
    }
}

Tableau Tableau::straight(std::vector<std::vector<int>> rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    Partition outer(lengths);
    if (outer.length() != rows.size()) throw InvalidArgument("straight tableau has an empty row");
    return Tableau(SkewShape(std::move(outer)), std::move(rows));
}

std::optional<int> Tableau::find(Cell c) const noexcept {
    if (!shape_.contains(c)) return std::nullopt;
    auto r = static_cast<std::size_t>(c.row);
    return rows_[r][static_cast<std::size_t>(c.col - inner()[r])];
}

int Tableau::at(Cell c) const {
    auto v = find(c);
    if (!v) throw InvalidArgument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not filled");
    return *v;
}

std::vector<Cell> Tableau::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int c = inner()[r]; c < outer()[r]; ++c) out.push_back({static_cast<int>(r), c});
    return out;
}

bool Tableau::is_semistandard() const noexcept {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k - 1] > row[k]) return false;
        if (r == 0) continue;
        for (int c = inner()[r]; c < outer()[r]; ++c) {
            auto above = find({static_cast<int>(r) - 1, c});
            if (above && *above >= rows_[r][static_cast<std::size_t>(c - inner()[r])]) return false;
        }
    }
    return true;
}

bool is_conjugate_semistandard(const Tableau& t) noexcept {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t k = 1; k < rows[r].size(); ++k)
            if (rows[r][k - 1] >= rows[r][k]) return false;
        if (r == 0) continue;
        for (int c = t.inner()[r]; c < t.outer()[r]; ++c) {
            auto above = t.find({static_cast<int>(r) - 1, c});
            if (above && *above > rows[r][static_cast<std::size_t>(c - t.inner()[r])]) return false;
        }
    }
    return true;
}

Tableau conjugate(const Tableau& t) {
    Partition outer = conjugate(t.outer());
    Partition inner = conjugate(t.inner());
    std::vector<std::vector<int>> rows(outer.length());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = inner[r]; c < outer[r]; ++c) rows[r].push_back(t.at({c, static_cast<int>(r)}));
    }
    return Tableau(SkewShape(std::move(outer), std::move(inner)), std::move(rows));
}

Composition content(const Tableau& t) {
    std::vector<int> counts;
    for (const auto& row : t.rows())
        for (int v : row) {
            if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
            ++counts[static_cast<std::size_t>(v - 1)];
        }
    return Composition(std::move(counts));
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(t.cell_count()));
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
}

TableauTuple::TableauTuple(TupleKind kind, std::vector<Tableau> members) : kind_(kind), members_(std::move(members)) {
    profile_.reserve(members_.size());
    for (const auto& m : members_) {
        if (!m.shape().is_straight()) throw InvalidArgument("tuple members must have straight shape");
        const auto& outer = m.outer();
        bool ok = kind_ == TupleKind::rows ? outer.length() <= 1 : (outer.empty() || outer[0] == 1);
        if (!ok)
            throw InvalidArgument(kind_ == TupleKind::rows ? "row tuple member is not a single row"
                                                           : "column tuple member is not a single column");
        if (!m.is_semistandard()) throw InvalidArgument("tuple member is not semistandard");
        profile_.push_back(m.cell_count());
    }
}

TableauTuple TableauTuple::from_lists(TupleKind kind, const std::vector<std::vector<int>>& lists) {
    std::vector<Tableau> members;
    members.reserve(lists.size());
    for (const auto& list : lists) {
        if (list.empty()) {
            members.emplace_back();
        } else if (kind == TupleKind::rows) {
            members.push_back(Tableau::straight({list}));
        } else {
            std::vector<std::vector<int>> rows;
            for (int v : list) rows.push_back({v});
            members.push_back(Tableau::straight(std::move(rows)));
        }
    }
    return TableauTuple(kind, std::move(members));
}

std::vector<int> TableauTuple::entries(std::size_t i) const {
    std::vector<int> out;
    for (const auto& row : members_.at(i).rows()) out.insert(out.end(), row.begin(), row.end());
    return out;
}

Composition content(const TableauTuple& t) {
    Composition total;
    for (const auto& m : t.members()) total = total + content(m);
    return total;
}

std::vector<int> reading_word(const TableauTuple& t) {
    std::vector<int> out;
    for (const auto& m : t.members()) {
        auto w = reading_word(m);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

namespace {

// Cell-by-cell backtracking in row-major order. Each cell takes values in
// [max(left, above + 1), letters - cells_below_in_column], restricted to
// letters with copies left.
class SsytFiller {
public:
    SsytFiller(const SkewShape& shape, const Composition& content,
               const std::function<bool(const Tableau&)>& visit)
        : shape_(shape), remaining_(content.counts()), visit_(visit) {
        while (!remaining_.empty() && remaining_.back() == 0) remaining_.pop_back();
        letters_ = static_cast<int>(remaining_.size());
        const auto& outer = shape.outer();
        const auto& inner = shape.inner();
        grid_.resize(outer.length());
        for (std::size_t r = 0; r < outer.length(); ++r) {
            grid_[r].assign(static_cast<std::size_t>(outer[r]), 0);
            for (int c = inner[r]; c < outer[r]; ++c) {
                cells_.push_back({static_cast<int>(r), c});
                int below = 0;
                for (std::size_t rr = r + 1; rr < outer.length() && c < outer[rr]; ++rr)
                    if (c >= inner[rr]) ++below;
                below_.push_back(below);
            }
        }
    }

    void run() {
        if (content_total() != static_cast<int>(cells_.size())) return;
        fill(0);
    }

private:
    int content_total() const {
        int s = 0;
        for (int c : remaining_) s += c;
        return s;
    }

    bool fill(std::size_t idx) {
        if (idx == cells_.size()) return emit();
        auto [r, c] = cells_[idx];
        auto ru = static_cast<std::size_t>(r);
        auto cu = static_cast<std::size_t>(c);
        int lo = 1;
        if (c > shape_.inner()[ru]) lo = grid_[ru][cu - 1];
        if (r > 0 && shape_.contains({r - 1, c})) lo = std::max(lo, grid_[ru - 1][cu] + 1);
        int hi = letters_ - below_[idx];
        for (int v = lo; v <= hi; ++v) {
            auto& left = remaining_[static_cast<std::size_t>(v - 1)];
            if (left == 0) continue;
            --left;
            grid_[ru][cu] = v;
            bool go_on = fill(idx + 1);
            ++left;
            if (!go_on) return false;
        }
        grid_[ru][cu] = 0;
        return true;
    }

    bool emit() {
        std::vector<std::vector<int>> rows(grid_.size());
        for (std::size_t r = 0; r < grid_.size(); ++r)
            rows[r].assign(grid_[r].begin() + shape_.inner()[r], grid_[r].end());
        return visit_(Tableau(shape_, std::move(rows)));
    }

    const SkewShape& shape_;
    std::vector<int> remaining_;
    const std::function<bool(const Tableau&)>& visit_;
    int letters_ = 0;
    std::vector<std::vector<int>> grid_;
    std::vector<Cell> cells_;
    std::vector<int> below_;
};

} // namespace

void for_each_ssyt(const SkewShape& shape, const Composition& content,
                   const std::function<bool(const Tableau&)>& visit) {
    SsytFiller(shape, content, visit).run();
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const Composition& content) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, content, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::uint64_t kostka(const SkewShape& shape, const Composition& content) {
    std::uint64_t n = 0;
    for_each_ssyt(shape, content, [&](const Tableau&) {
        ++n;
        return true;
    });
    return n;
}

std::uint64_t kostka(const Partition& shape, const Composition& content) {
    return kostka(SkewShape(shape), content);
}

} // namespace plethyx
