#include "plethyx/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plethyx/error.hpp"

namespace plethyx {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

void subpartitions_rec(const Partition& outer, std::size_t row, int bound, std::vector<int>& cur,
                       std::vector<Partition>& out) {
    if (row == outer.length()) {
        out.emplace_back(cur);
        return;
    }
    int top = std::min(bound, outer[row]);
    for (int part = top; part >= 0; --part) {
        cur.push_back(part);
        if (part == 0) {
            out.emplace_back(cur);
        } else {
            subpartitions_rec(outer, row + 1, part, cur, out);
        }
        cur.pop_back();
    }
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArgument("partition parts must be positive: " + join(parts_));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must weakly decrease: " + join(parts_));
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i)
        if (other[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const { return join(parts_); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ULL;
    }
    return h;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Partition doubled(const Partition& p) {
    std::vector<int> out;
    out.reserve(2 * p.length());
    for (int part : p.parts()) {
        out.push_back(part);
        out.push_back(part);
    }
    return Partition(std::move(out));
}

Partition two_column_hook(int twos, int ones) {
    if (twos < 0 || ones < 0) throw InvalidArgument("negative exponent in (2^a,1^b)");
    std::vector<int> out(static_cast<std::size_t>(twos), 2);
    out.insert(out.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidArgument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto level = partitions_of(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (outer.empty()) return {Partition{}};
    subpartitions_rec(outer, 0, outer[0], cur, out);
    return out;
}

Composition::Composition(std::initializer_list<int> counts) : Composition(std::vector<int>(counts)) {}

Composition::Composition(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0) throw InvalidArgument("composition entries must be nonnegative: " + join(counts_));
}

Composition::Composition(const Partition& p) : counts_(p.parts()) {}

int Composition::total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool Composition::operator==(const Composition& other) const noexcept {
    std::size_t n = std::max(letters(), other.letters());
    for (std::size_t i = 0; i < n; ++i)
        if ((*this)[i] != other[i]) return false;
    return true;
}

std::string Composition::to_string() const { return join(counts_); }

Composition operator+(const Composition& a, const Composition& b) {
    std::vector<int> out(std::max(a.letters(), b.letters()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Composition(std::move(out));
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw InvalidArgument("skew shape inner " + inner_.to_string() + " not contained in outer " +
                              outer_.to_string());
}

bool SkewShape::contains(Cell c) const noexcept {
    if (c.row < 0 || c.col < 0) return false;
    auto r = static_cast<std::size_t>(c.row);
    return c.col < outer_[r] && c.col >= inner_[r];
}

} // namespace plethyx
