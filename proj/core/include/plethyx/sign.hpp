#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "plethyx/partition.hpp"
#include "plethyx/tableau.hpp"

namespace plethyx {

enum class Basis { h, e };

const char* to_string(Basis b) noexcept;

/// Multiplicity of s_nu in the symmetric (k_plus) and anti-symmetric
/// (k_minus) part of the square.
struct SignCounts {
    std::uint64_t k_plus = 0;
    std::uint64_t k_minus = 0;
    std::uint64_t total() const noexcept { return k_plus + k_minus; }
    bool operator==(const SignCounts&) const = default;
};

/// Split of the Schur expansion of g^2 (g = h_lambda or e_lambda, optionally
/// multiplied by s_mu) into s_2[g] and s_11[g]. Keys are sorted
/// lexicographically largest first; only nu with a nonzero count appear.
struct SignedKostkaTable {
    Basis basis = Basis::h;
    Partition lambda;
    Partition mu;
    std::map<Partition, SignCounts, std::greater<>> entries;

    bool operator==(const SignedKostkaTable&) const = default;
};

/// j_i for each i, where rect(q^(i)) has shape (2*lambda_i - j_i, j_i).
/// q is a semistandard tableau (straight or skew) with content lambda^2.
/// Throws InvalidArgument on a content mismatch and ShapeMismatch if a
/// rectified piece has another shape.
std::vector<int> sign_exponents_h(const Tableau& q, const Partition& lambda);

/// Product of (-1)^{j_i} over sign_exponents_h.
int sign_h(const Tableau& q, const Partition& lambda);

/// j_i for each i, where (rect(q~^(i)'))' has shape (2^{lambda_i - j_i}, 1^{2 j_i}).
/// q~ is conjugate-semistandard with content lambda^2.
std::vector<int> sign_exponents_e(const Tableau& q_tilde, const Partition& lambda);

int sign_e(const Tableau& q_tilde, const Partition& lambda);

/// s_2[h_lambda] and s_11[h_lambda] via signs of tableaux of shape nu, content lambda^2.
SignedKostkaTable decompose_h_square(const Partition& lambda, unsigned threads = 1);

/// s_2[e_lambda] and s_11[e_lambda] via signs of conjugate tableaux of shape nu
/// (the conjugates of semistandard tableaux of shape nu', content lambda^2).
SignedKostkaTable decompose_e_square(const Partition& lambda, unsigned threads = 1);

/// s_mu s_2[h_lambda] and s_mu s_11[h_lambda] via skew tableaux of shape nu/mu.
SignedKostkaTable decompose_skew_h_square(const Partition& mu, const Partition& lambda, unsigned threads = 1);

/// s_mu s_2[e_lambda] and s_mu s_11[e_lambda] via conjugate skew tableaux of shape nu/mu.
SignedKostkaTable decompose_skew_e_square(const Partition& mu, const Partition& lambda, unsigned threads = 1);

SignedKostkaTable decompose_square(Basis basis, const Partition& lambda, const Partition& mu = {},
                                   unsigned threads = 1);

/// Littlewood's closed forms for lambda = (n): second row (h) or number of
/// one-cell rows / 2 (e) even goes to s_2, odd to s_11.
SignedKostkaTable littlewood_closed_form(int n, Basis basis);

} // namespace plethyx
