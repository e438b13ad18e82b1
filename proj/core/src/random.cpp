#include "plethyx/random.hpp"

#include <algorithm>
#include <set>

#include "plethyx/error.hpp"

namespace plethyx {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_weak_row(Rng& rng, int length, int alphabet) {
    std::vector<int> row;
    for (int k = 0; k < length; ++k) row.push_back(uniform(rng, 1, alphabet));
    std::sort(row.begin(), row.end());
    return row;
}

} // namespace

Rng item_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Partition random_partition(Rng& rng, int max_size) {
    int remaining = uniform(rng, 0, std::max(0, max_size));
    std::vector<int> parts;
    while (remaining > 0) {
        int part = uniform(rng, 1, remaining);
        parts.push_back(part);
        remaining -= part;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Tableau random_skew_tableau(Rng& rng, int max_cells, int max_entry) {
    if (max_cells < 1 || max_entry < 1) throw InvalidArgument("random_skew_tableau needs positive bounds");
    while (true) {
        Partition outer = random_partition(rng, max_cells + max_cells / 2);
        std::vector<int> inner;
        for (std::size_t r = 0; r < outer.length(); ++r) {
            int bound = std::min(outer[r], r == 0 ? outer[0] : inner.back());
            inner.push_back(uniform(rng, 0, bound));
        }
        SkewShape shape(outer, Partition(inner));
        if (shape.size() < 1 || shape.size() > max_cells) continue;

        std::vector<std::vector<int>> rows(outer.length());
        for (std::size_t r = 0; r < outer.length(); ++r) {
            for (int c = inner[r]; c < outer[r]; ++c) {
                int lo = 1;
                if (c > inner[r]) lo = rows[r].back();
                if (r > 0 && c >= inner[r - 1] && c < outer[r - 1])
                    lo = std::max(lo, rows[r - 1][static_cast<std::size_t>(c - inner[r - 1])] + 1);
                int hi = std::max(lo, std::min(max_entry, lo + 2));
                rows[r].push_back(uniform(rng, lo, hi));
            }
        }
        return Tableau(std::move(shape), std::move(rows));
    }
}

Tableau random_straight_tableau(Rng& rng, int max_cells, int max_entry) {
    if (max_cells < 1 || max_entry < 1) throw InvalidArgument("random_straight_tableau needs positive bounds");
    Partition shape;
    while (shape.empty()) shape = random_partition(rng, max_cells);
    std::vector<std::vector<int>> rows(shape.length());
    for (std::size_t r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape[r]; ++c) {
            int lo = c > 0 ? rows[r].back() : 1;
            if (r > 0) lo = std::max(lo, rows[r - 1][static_cast<std::size_t>(c)] + 1);
            int hi = std::max(lo, std::min(max_entry, lo + 2));
            rows[r].push_back(uniform(rng, lo, hi));
        }
    }
    return Tableau::straight(std::move(rows));
}

Biword random_biword(Rng& rng, int max_length, int alphabet) {
    const int length = uniform(rng, 1, max_length);
    std::vector<BiLetter> letters;
    for (int k = 0; k < length; ++k) letters.push_back({uniform(rng, 1, alphabet), uniform(rng, 1, alphabet)});
    std::sort(letters.begin(), letters.end());
    return Biword(std::move(letters));
}

BurgeWord random_burge_word(Rng& rng, int max_length, int alphabet) {
    const int length = std::min(uniform(rng, 1, max_length), alphabet * alphabet);
    std::set<BiLetter> chosen;
    while (static_cast<int>(chosen.size()) < length) chosen.insert({uniform(rng, 1, alphabet), uniform(rng, 1, alphabet)});
    std::vector<BiLetter> letters(chosen.begin(), chosen.end());
    std::sort(letters.begin(), letters.end(), [](const BiLetter& a, const BiLetter& b) {
        return a.top != b.top ? a.top < b.top : a.bottom > b.bottom;
    });
    return BurgeWord(std::move(letters));
}

TableauTuple random_tuple(Rng& rng, TupleKind kind, const std::vector<int>& sizes, int alphabet) {
    std::vector<std::vector<int>> lists;
    for (int size : sizes) {
        if (kind == TupleKind::rows) {
            lists.push_back(random_weak_row(rng, size, alphabet));
        } else {
            if (size > alphabet) throw InvalidArgument("a column longer than the alphabet cannot be strict");
            std::vector<int> pool(static_cast<std::size_t>(alphabet));
            for (int k = 0; k < alphabet; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(static_cast<std::size_t>(size));
            std::sort(pool.begin(), pool.end());
            lists.push_back(std::move(pool));
        }
    }
    return TableauTuple::from_lists(kind, lists);
}

} // namespace plethyx
