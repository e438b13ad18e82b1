#include "plethyx/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <functional>
#include <mutex>
#include <utility>

#include "plethyx/error.hpp"

namespace plethyx {

const char* to_string(SymBasis b) noexcept {
    switch (b) {
    case SymBasis::m: return "m";
    case SymBasis::h: return "h";
    case SymBasis::e: return "e";
    case SymBasis::p: return "p";
    case SymBasis::s: return "s";
    }
    return "?";
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> out;
    out.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(out),
               std::greater<>());
    return Partition(std::move(out));
}

Partition scale_parts(int k, const Partition& rho) {
    std::vector<int> out = rho.parts();
    for (int& v : out) v *= k;
    return Partition(std::move(out));
}

// h_0..h_n (or e_0..e_n) in the power-sum basis via Newton's identities:
// n h_n = sum_i p_i h_{n-i},  n e_n = sum_i (-1)^{i-1} p_i e_{n-i}.
const SymFunc& newton(SymBasis basis, int n) {
    static std::mutex lock;
    static std::vector<SymFunc> h_cache{SymFunc(1)};
    static std::vector<SymFunc> e_cache{SymFunc(1)};
    std::lock_guard guard(lock);
    auto& cache = basis == SymBasis::h ? h_cache : e_cache;
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        SymFunc next;
        for (int i = 1; i <= k; ++i) {
            Rational c = (basis == SymBasis::e && i % 2 == 0) ? -1 : 1;
            next += SymFunc::power_sum(Partition{i}, c) * cache[static_cast<std::size_t>(k - i)];
        }
        next *= Rational(1, k);
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(n)];
}

// det [ elem_{parts_i - i + j} ] by Laplace expansion along rows, memoised on
// the set of used columns.
SymFunc jacobi_trudi(SymBasis elem, const Partition& parts) {
    const int len = static_cast<int>(parts.length());
    std::map<std::pair<int, unsigned>, SymFunc> memo;
    std::function<SymFunc(int, unsigned)> expand = [&](int row, unsigned used) -> SymFunc {
        if (row == len) return SymFunc(1);
        auto key = std::make_pair(row, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        SymFunc acc;
        int position = 0;
        for (int col = 0; col < len; ++col) {
            if (used & (1u << col)) continue;
            int index = parts[static_cast<std::size_t>(row)] - row + col;
            if (index >= 0) {
                SymFunc term = newton(elem, index) * expand(row + 1, used | (1u << col));
                if (position % 2) term *= Rational(-1);
                acc += term;
            }
            ++position;
        }
        memo.emplace(key, acc);
        return acc;
    };
    return expand(0, 0);
}

// Ways to distribute the parts rho[idx..] over the slots `remaining` so each
// slot is filled exactly. The count is symmetric in the slots, so the key is sorted.
class MonomialCounter {
public:
    explicit MonomialCounter(const Partition& rho) : rho_(rho.parts()) {}

    Integer count(std::size_t idx, std::vector<int> remaining) {
        std::sort(remaining.begin(), remaining.end(), std::greater<>());
        while (!remaining.empty() && remaining.back() == 0) remaining.pop_back();
        if (idx == rho_.size()) return remaining.empty() ? 1 : 0;
        auto key = std::make_pair(idx, remaining);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Integer total = 0;
        for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
            if (remaining[slot] < rho_[idx]) continue;
            auto next = remaining;
            next[slot] -= rho_[idx];
            total += count(idx + 1, std::move(next));
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::vector<int> rho_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

class KostkaTable {
public:
    const Integer& get(const Partition& shape, const Partition& weight) {
        auto key = std::make_pair(shape, weight);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Integer value = compute(shape, weight);
        return memo_.emplace(std::move(key), value).first->second;
    }

private:
    Integer compute(const Partition& shape, const Partition& weight) {
        if (shape.size() != weight.size()) return 0;
        if (weight.empty()) return 1;
        const int strip = weight.parts().back();
        std::vector<int> rest(weight.parts().begin(), weight.parts().end() - 1);
        Partition smaller_weight(std::move(rest));
        Integer total = 0;
        // Inner rows kappa_i with shape_{i+1} <= kappa_i <= shape_i removing `strip` cells.
        std::vector<int> kappa(shape.length(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == shape.length()) {
                if (left == 0) total += get(Partition(kappa), smaller_weight);
                return;
            }
            int hi = shape[i];
            int lo = shape[i + 1];
            for (int k = hi; k >= lo; --k) {
                int removed = hi - k;
                if (removed > left) break;
                kappa[i] = k;
                rec(i + 1, left - removed);
            }
        };
        rec(0, strip);
        return total;
    }

    std::map<std::pair<Partition, Partition>, Integer> memo_;
};

std::map<Partition, Rational> monomial_component(const SymFunc& f, int d) {
    std::map<Partition, Rational> out;
    for (const auto& alpha : partitions_of(d)) {
        Rational c = 0;
        for (const auto& [rho, coeff] : f.terms()) {
            if (rho.size() != d) continue;
            MonomialCounter counter(rho);
            c += coeff * Rational(counter.count(0, alpha.parts()));
        }
        if (c != 0) out.emplace(alpha, c);
    }
    return out;
}

} // namespace

SymFunc::SymFunc(const Rational& constant) {
    if (constant != 0) terms_.emplace(Partition{}, constant);
}

SymFunc SymFunc::power_sum(const Partition& rho, const Rational& coeff) {
    SymFunc f;
    f.add_term(rho, coeff);
    return f;
}

Rational SymFunc::coefficient(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const noexcept {
    int d = 0;
    for (const auto& [rho, c] : terms_) d = std::max(d, rho.size());
    return d;
}

bool SymFunc::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.size();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.size() == d; });
}

SymFunc SymFunc::homogeneous_part(int d) const {
    SymFunc out;
    for (const auto& [rho, c] : terms_)
        if (rho.size() == d) out.terms_.emplace(rho, c);
    return out;
}

void SymFunc::add_term(const Partition& rho, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [rho, c] : o.terms_) add_term(rho, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (const auto& [rho, c] : o.terms_) add_term(rho, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rho, v] : terms_) v *= c;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc out;
    for (const auto& [ra, ca] : a.terms_)
        for (const auto& [rb, cb] : b.terms_) out.add_term(merge_parts(ra, rb), ca * cb);
    return out;
}

SymFunc generator(SymBasis basis, const Partition& lambda) {
    switch (basis) {
    case SymBasis::p: return SymFunc::power_sum(lambda);
    case SymBasis::h:
    case SymBasis::e: {
        SymFunc out(1);
        for (int part : lambda.parts()) out = out * newton(basis, part);
        return out;
    }
    case SymBasis::s: {
        Partition dual = conjugate(lambda);
        if (dual.length() < lambda.length()) return jacobi_trudi(SymBasis::e, dual);
        return jacobi_trudi(SymBasis::h, lambda);
    }
    case SymBasis::m: break;
    }
    throw InvalidArgument("generator: the monomial basis is output-only");
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) { return f * g; }

SymFunc power_plethysm(int k, const SymFunc& g) {
    if (k <= 0) throw InvalidArgument("power_plethysm: k must be positive");
    SymFunc out;
    for (const auto& [rho, c] : g.terms()) out += SymFunc::power_sum(scale_parts(k, rho), c);
    return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    std::map<int, SymFunc> inner;
    auto pk = [&](int k) -> const SymFunc& {
        auto it = inner.find(k);
        if (it == inner.end()) it = inner.emplace(k, power_plethysm(k, g)).first;
        return it->second;
    };
    SymFunc out;
    for (const auto& [rho, c] : f.terms()) {
        SymFunc term(c);
        for (int part : rho.parts()) term = term * pk(part);
        out += term;
    }
    return out;
}

Integer power_sum_monomial_coefficient(const Partition& rho, const Partition& alpha) {
    if (rho.size() != alpha.size()) return 0;
    MonomialCounter counter(rho);
    return counter.count(0, alpha.parts());
}

std::map<Partition, Rational> monomial_expand(const SymFunc& f) {
    std::map<Partition, Rational> out;
    std::vector<int> degrees;
    for (const auto& [rho, c] : f.terms()) degrees.push_back(rho.size());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees) out.merge(monomial_component(f, d));
    return out;
}

Integer kostka_number(const Partition& shape, const Partition& weight) {
    KostkaTable table;
    return table.get(shape, weight);
}

std::map<Partition, Rational> schur_expand(const SymFunc& f) {
    std::map<Partition, Rational> result;
    KostkaTable kostka;
    std::vector<int> degrees;
    for (const auto& [rho, c] : f.terms()) degrees.push_back(rho.size());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    for (int d : degrees) {
        const auto monomials = monomial_component(f, d);
        const auto order = partitions_of(d); // lexicographically largest first
        std::vector<Rational> coeff(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            auto it = monomials.find(order[k]);
            if (it != monomials.end()) coeff[k] = it->second;
        }
        // s_alpha = m_alpha + sum over beta below alpha of K_{alpha,beta} m_beta.
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (coeff[k] == 0) continue;
            const Rational c = coeff[k];
            result.emplace(order[k], c);
            for (std::size_t b = k; b < order.size(); ++b) {
                const Integer& kab = kostka.get(order[k], order[b]);
                if (kab != 0) coeff[b] -= c * Rational(kab);
            }
            if (coeff[k] != 0) throw InternalError("schur_expand: leading coefficient did not cancel");
        }
        for (const auto& c : coeff)
            if (c != 0) throw InternalError("schur_expand: nonzero remainder after elimination");
    }
    return result;
}

SquareSplit split_square(const SymFunc& g) {
    SymFunc square = g * g;
    SymFunc p2 = power_plethysm(2, g);
    SquareSplit out{square + p2, square - p2};
    out.sym *= Rational(1, 2);
    out.antisym *= Rational(1, 2);
    return out;
}

bool verify_symantisym(std::span<const SymFunc> gs) {
    const std::size_t n = gs.size();
    if (n >= 8 * sizeof(unsigned)) throw InvalidArgument("verify_symantisym: too many factors");
    SymFunc product(1);
    std::vector<SquareSplit> parts;
    parts.reserve(n);
    for (const auto& g : gs) {
        product = product * g;
        parts.push_back(split_square(g));
    }
    const SquareSplit whole = split_square(product);
    SymFunc even, odd;
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        SymFunc term(1);
        for (std::size_t i = 0; i < n; ++i) term = term * ((subset >> i) & 1u ? parts[i].antisym : parts[i].sym);
        (std::popcount(subset) % 2 == 0 ? even : odd) += term;
    }
    return even == whole.sym && odd == whole.antisym;
}

} // namespace plethyx
