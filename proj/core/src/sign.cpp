#include "plethyx/sign.hpp"

#include <string>

#include "plethyx/error.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/parallel.hpp"
#include "plethyx/rsk.hpp"

namespace plethyx {

const char* to_string(Basis b) noexcept { return b == Basis::h ? "h" : "e"; }

namespace {

void require_content(const Tableau& q, const Partition& lambda) {
    if (content(q) != Composition(doubled(lambda)))
        throw InvalidArgument("tableau content " + content(q).to_string() + " is not lambda^2 for lambda = (" +
                              lambda.to_string() + ")");
}

int parity_sign(const std::vector<int>& exponents) {
    int total = 0;
    for (int j : exponents) total += j;
    return total % 2 == 0 ? 1 : -1;
}

SignedKostkaTable run_decomposition(Basis basis, const Partition& mu, const Partition& lambda, unsigned threads) {
    const int n = 2 * lambda.size() + mu.size();
    const Composition weight(doubled(lambda));
    std::vector<Partition> candidates;
    for (auto& nu : partitions_of(n))
        if (nu.contains(mu)) candidates.push_back(std::move(nu));

    auto counts = parallel_map(candidates.size(), threads, [&](std::size_t k) {
        SignCounts c;
        const Partition& nu = candidates[k];
        if (basis == Basis::h) {
            for_each_ssyt(SkewShape(nu, mu), weight, [&](const Tableau& q) {
                (sign_h(q, lambda) > 0 ? c.k_plus : c.k_minus) += 1;
                return true;
            });
        } else {
            // Semistandard fillings of nu'/mu' are the conjugates of the q~ of shape nu/mu.
            for_each_ssyt(SkewShape(conjugate(nu), conjugate(mu)), weight, [&](const Tableau& t) {
                (sign_e(conjugate(t), lambda) > 0 ? c.k_plus : c.k_minus) += 1;
                return true;
            });
        }
        return c;
    });

    SignedKostkaTable table{basis, lambda, mu, {}};
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (counts[k].total() > 0) table.entries.emplace(candidates[k], counts[k]);
    return table;
}

} // namespace

std::vector<int> sign_exponents_h(const Tableau& q, const Partition& lambda) {
    require_content(q, lambda);
    std::vector<int> out;
    out.reserve(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        Partition shape = rectified_shape(subtableau(q, static_cast<int>(i) + 1));
        const int li = lambda[i];
        if (shape.length() > 2 || shape.size() != 2 * li || shape[1] > li)
            throw ShapeMismatch("rect(Q^(" + std::to_string(i + 1) + ")) has shape (" + shape.to_string() +
                                "), expected (2*" + std::to_string(li) + "-j, j)");
        out.push_back(shape[1]);
    }
    return out;
}

int sign_h(const Tableau& q, const Partition& lambda) { return parity_sign(sign_exponents_h(q, lambda)); }

std::vector<int> sign_exponents_e(const Tableau& q_tilde, const Partition& lambda) {
    if (!is_conjugate_semistandard(q_tilde)) throw InvalidArgument("sign_e needs a conjugate-semistandard tableau");
    require_content(q_tilde, lambda);
    std::vector<int> out;
    out.reserve(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        Partition rect_shape = rectified_shape(conjugate(subtableau(q_tilde, static_cast<int>(i) + 1)));
        Partition hook = conjugate(rect_shape);
        const int li = lambda[i];
        int twos = 0, ones = 0;
        bool ok = true;
        for (int part : hook.parts()) {
            if (part == 2) {
                ++twos;
            } else if (part == 1) {
                ++ones;
            } else {
                ok = false;
            }
        }
        if (!ok || ones % 2 != 0 || twos + ones / 2 != li)
            throw ShapeMismatch("piece " + std::to_string(i + 1) + " has shape (" + hook.to_string() +
                                "), expected (2^(" + std::to_string(li) + "-j), 1^(2j))");
        out.push_back(ones / 2);
    }
    return out;
}

int sign_e(const Tableau& q_tilde, const Partition& lambda) { return parity_sign(sign_exponents_e(q_tilde, lambda)); }

SignedKostkaTable decompose_h_square(const Partition& lambda, unsigned threads) {
    return run_decomposition(Basis::h, {}, lambda, threads);
}

SignedKostkaTable decompose_e_square(const Partition& lambda, unsigned threads) {
    return run_decomposition(Basis::e, {}, lambda, threads);
}

SignedKostkaTable decompose_skew_h_square(const Partition& mu, const Partition& lambda, unsigned threads) {
    return run_decomposition(Basis::h, mu, lambda, threads);
}

SignedKostkaTable decompose_skew_e_square(const Partition& mu, const Partition& lambda, unsigned threads) {
    return run_decomposition(Basis::e, mu, lambda, threads);
}

SignedKostkaTable decompose_square(Basis basis, const Partition& lambda, const Partition& mu, unsigned threads) {
    return run_decomposition(basis, mu, lambda, threads);
}

SignedKostkaTable littlewood_closed_form(int n, Basis basis) {
    if (n < 0) throw InvalidArgument("littlewood_closed_form: negative n");
    SignedKostkaTable table{basis, n > 0 ? Partition{n} : Partition{}, {}, {}};
    for (int j = 0; j <= n; ++j) {
        Partition nu = basis == Basis::h ? Partition{2 * n - j, j} : two_column_hook(n - j, 2 * j);
        auto& c = table.entries[nu];
        (j % 2 == 0 ? c.k_plus : c.k_minus) += 1;
    }
    return table;
}

} // namespace plethyx
