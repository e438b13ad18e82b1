#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plethyx/sign.hpp"

namespace plethyx {

/// Unset bounds fall back to per-suite defaults.
struct SuiteOptions {
    std::optional<int> max_n;      // littlewood: 8, domino: 6, symantisym (factors): 3
    std::optional<int> max_weight; // oracle: 5, corollary-qi exhaustive part: 3
    int max_mu = 0;                // oracle: also every mu with |mu| <= max_mu
    std::optional<std::size_t> count; // random cases for rsk-roundtrip, jdt-order, corollary-qi: 1000
    std::uint64_t seed = 7;
    unsigned threads = 1;
};

struct SuiteReport {
    std::string suite;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// First few counterexamples, in item order.
    std::vector<std::string> counterexamples;

    bool passed() const noexcept { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite. The report depends only on
/// the suite, its bounds and the seed, never on the thread count.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

std::string to_json(const SuiteReport& report, int indent = -1);

/// The table decompose_square should produce, read off the Schur expansions
/// of s_mu * s_2[g] and s_mu * s_11[g] computed by the power-sum oracle.
/// Throws InternalError if a coefficient is not a nonnegative integer.
SignedKostkaTable oracle_table(Basis basis, const Partition& lambda, const Partition& mu = {});

} // namespace plethyx
