#include "plethyx/suites.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include <json.hpp>

#include "plethyx/domino.hpp"
#include "plethyx/error.hpp"
#include "plethyx/io.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/parallel.hpp"
#include "plethyx/random.hpp"
#include "plethyx/rsk.hpp"
#include "plethyx/symfunc.hpp"

namespace plethyx {

namespace {

constexpr std::size_t kKeptCounterexamples = 5;

using Outcome = std::optional<std::string>; // counterexample, if any
using Check = std::function<Outcome()>;

SuiteReport collect(std::string name, const std::vector<Check>& checks, unsigned threads) {
    auto outcomes = parallel_map(checks.size(), threads, [&](std::size_t k) -> Outcome {
        try {
            return checks[k]();
        } catch (const Error& e) {
            return std::string("exception: ") + e.what();
        }
    });
    SuiteReport report{std::move(name), checks.size(), 0, {}};
    for (auto& o : outcomes) {
        if (!o) continue;
        ++report.failed;
        if (report.counterexamples.size() < kKeptCounterexamples) report.counterexamples.push_back(std::move(*o));
    }
    return report;
}

std::string parens(const Partition& p) { return "(" + p.to_string() + ")"; }

Outcome compare_tables(const std::string& what, const SignedKostkaTable& got, const SignedKostkaTable& want) {
    if (got.entries == want.entries) return std::nullopt;
    return what + ": got " + to_json(got) + " expected " + to_json(want);
}

std::vector<Check> littlewood_checks(const SuiteOptions& o) {
    std::vector<Check> checks;
    for (int n = 1; n <= o.max_n.value_or(8); ++n)
        for (Basis b : {Basis::h, Basis::e})
            checks.push_back([n, b] {
                return compare_tables(std::string("basis ") + to_string(b) + " n=" + std::to_string(n),
                                      decompose_square(b, Partition{n}), littlewood_closed_form(n, b));
            });
    return checks;
}

std::vector<Check> oracle_checks(const SuiteOptions& o) {
    std::vector<Check> checks;
    for (const auto& mu : partitions_up_to(o.max_mu))
        for (const auto& lambda : partitions_up_to(o.max_weight.value_or(5))) {
            if (lambda.empty()) continue;
            for (Basis b : {Basis::h, Basis::e})
                checks.push_back([mu, lambda, b] {
                    return compare_tables(std::string("basis ") + to_string(b) + " lambda=" + parens(lambda) +
                                              " mu=" + parens(mu),
                                          decompose_square(b, lambda, mu), oracle_table(b, lambda, mu));
                });
        }
    return checks;
}

std::vector<Check> rsk_roundtrip_checks(const SuiteOptions& o) {
    std::vector<Check> checks;
    const std::size_t count = o.count.value_or(1000);
    for (std::size_t k = 0; k < count; ++k)
        checks.push_back([seed = o.seed, k]() -> Outcome {
            Rng rng = item_rng(seed, k);
            const Biword w = random_biword(rng, 20, 8);
            const RskPair pq = rsk(w);
            const std::string tag = "biword " + format_biword(w.letters());
            if (!pq.p.is_semistandard() || !pq.q.is_semistandard() || pq.p.outer() != pq.q.outer())
                return tag + ": insertion produced " + to_json(pq);
            if (rsk_inverse(pq) != w) return tag + ": inverse gave " + format_biword(rsk_inverse(pq).letters());
            if (rsk_via_product(w) != pq) return tag + ": product-based insertion gave " + to_json(rsk_via_product(w));

            const BurgeWord b = random_burge_word(rng, 20, 8);
            const RskPair tilde = rsk_tilde(b);
            const std::string btag = "burge word " + format_biword(b.letters());
            if (!tilde.p.is_semistandard() || !is_conjugate_semistandard(tilde.q) || tilde.p.outer() != tilde.q.outer())
                return btag + ": insertion produced " + to_json(tilde);
            if (rsk_tilde_inverse(tilde) != b)
                return btag + ": inverse gave " + format_biword(rsk_tilde_inverse(tilde).letters());
            return std::nullopt;
        });
    return checks;
}

std::vector<Check> jdt_order_checks(const SuiteOptions& o) {
    std::vector<Check> checks;
    const std::size_t count = o.count.value_or(1000);
    for (std::size_t k = 0; k < count; ++k)
        checks.push_back([seed = o.seed, k]() -> Outcome {
            Rng rng = item_rng(seed, k);
            const Tableau t = random_skew_tableau(rng, 12, 6);
            const std::string tag = "tableau " + to_json(t);
            const Tableau by_default = rectify(t);
            const Tableau by_first = rectify(t, [](std::span<const Cell>) { return std::size_t{0}; });
            Rng pick_rng = item_rng(seed ^ 0x9e3779b97f4a7c15ULL, k);
            const Tableau by_random = rectify(t, [&](std::span<const Cell> corners) {
                return std::uniform_int_distribution<std::size_t>(0, corners.size() - 1)(pick_rng);
            });
            if (by_default != by_first || by_default != by_random)
                return tag + ": corner orders disagree: " + to_json(by_default) + " " + to_json(by_first) + " " +
                       to_json(by_random);
            if (!by_default.shape().is_straight() || !by_default.is_semistandard() ||
                content(by_default) != content(t))
                return tag + ": rectification produced " + to_json(by_default);
            if (insert_word(reading_word(t)) != by_default)
                return tag + ": reading-word insertion gave " + to_json(insert_word(reading_word(t)));

            const Tableau t1 = random_straight_tableau(rng, 8, 6);
            const Tableau t2 = random_straight_tableau(rng, 8, 6);
            auto word = reading_word(t1);
            auto w2 = reading_word(t2);
            word.insert(word.end(), w2.begin(), w2.end());
            const Tableau prod = rectify(star_product(t1, t2));
            if (insert_word(word) != prod)
                return "pair " + to_json(t1) + " " + to_json(t2) + ": rect(t1*t2) = " + to_json(prod) +
                       " but insertion gave " + to_json(insert_word(word));
            return std::nullopt;
        });
    return checks;
}

std::vector<std::vector<int>> weak_rows(int length, int alphabet) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= alphabet; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Outcome check_row_tuple(const TableauTuple& t, const Partition& lambda) {
    const RskPair pq = rsk(row_tuple_to_biword(t));
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const Tableau lhs = sub_biword_rsk(t, static_cast<int>(i)).q;
        const Tableau rhs = rectify(subtableau(pq.q, static_cast<int>(i)));
        if (lhs != rhs)
            return "row tuple " + format_biword(row_tuple_to_biword(t).letters()) + " i=" + std::to_string(i) +
                   ": Q_i = " + to_json(lhs) + " rect = " + to_json(rhs);
    }
    sign_exponents_h(pq.q, lambda);
    return std::nullopt;
}

Outcome check_column_tuple(const TableauTuple& t, const Partition& lambda) {
    const RskPair pq = rsk_tilde(column_tuple_to_burge(t));
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const Tableau lhs = conjugate(sub_burge_rsk(t, static_cast<int>(i)).q);
        const Tableau rhs = rectify(conjugate(subtableau(pq.q, static_cast<int>(i))));
        if (lhs != rhs)
            return "column tuple " + format_biword(column_tuple_to_burge(t).letters()) + " i=" + std::to_string(i) +
                   ": Q_i' = " + to_json(lhs) + " rect = " + to_json(rhs);
    }
    sign_exponents_e(pq.q, lambda);
    return std::nullopt;
}

std::vector<Check> corollary_checks(const SuiteOptions& o) {
    constexpr int kAlphabet = 4;
    std::vector<Check> checks;
    for (const auto& lambda : partitions_up_to(o.max_weight.value_or(3))) {
        if (lambda.empty()) continue;
        const Partition sq = doubled(lambda);
        std::vector<std::vector<std::vector<int>>> choices;
        std::size_t total = 1;
        for (int size : sq.parts()) {
            choices.push_back(weak_rows(size, kAlphabet));
            total *= choices.back().size();
        }
        auto shared = std::make_shared<const decltype(choices)>(std::move(choices));
        for (std::size_t index = 0; index < total; ++index)
            checks.push_back([shared, lambda, index] {
                std::vector<std::vector<int>> lists;
                std::size_t rest = index;
                for (const auto& opts : *shared) {
                    lists.push_back(opts[rest % opts.size()]);
                    rest /= opts.size();
                }
                return check_row_tuple(TableauTuple::from_lists(TupleKind::rows, lists), lambda);
            });
    }
    const std::size_t count = o.count.value_or(1000);
    for (std::size_t k = 0; k < count; ++k)
        checks.push_back([seed = o.seed, k] {
            Rng rng = item_rng(seed, k);
            Partition lambda;
            while (lambda.size() < 4) lambda = random_partition(rng, 7);
            return check_row_tuple(random_tuple(rng, TupleKind::rows, doubled(lambda).parts(), 7), lambda);
        });
    for (std::size_t k = 0; k < count; ++k)
        checks.push_back([seed = o.seed, k, count] {
            Rng rng = item_rng(seed, count + k);
            Partition lambda;
            while (lambda.empty()) lambda = random_partition(rng, 6);
            return check_column_tuple(random_tuple(rng, TupleKind::columns, doubled(lambda).parts(), 8), lambda);
        });
    return checks;
}

DominoTableau h_family_member(int n, int j) {
    std::vector<Domino> ds;
    const int vertical = 2 * n - 2 * j;
    for (int c = 0; c < vertical; ++c) ds.push_back({{0, c}, {1, c}, 1, Orientation::vertical});
    for (int p = 0; p < j; ++p) {
        const int c = vertical + 2 * p;
        ds.push_back({{0, c}, {0, c + 1}, 1, Orientation::horizontal});
        ds.push_back({{1, c}, {1, c + 1}, 2, Orientation::horizontal});
    }
    return DominoTableau(Partition{2 * n, 2 * n}, std::move(ds));
}

DominoTableau e_family_member(int n, int j) {
    std::vector<Domino> ds;
    for (int k = 1; k <= n - j; ++k) {
        const int r = 2 * (k - 1);
        ds.push_back({{r, 0}, {r + 1, 0}, k, Orientation::vertical});
        ds.push_back({{r, 1}, {r + 1, 1}, k, Orientation::vertical});
    }
    for (int h = 0; h < 2 * j; ++h) {
        const int r = 2 * (n - j) + h;
        ds.push_back({{r, 0}, {r, 1}, n - j + 1 + h, Orientation::horizontal});
    }
    return DominoTableau(two_column_hook(2 * n, 0), std::move(ds));
}

std::vector<Check> domino_checks(const SuiteOptions& o) {
    std::vector<Check> checks;
    for (int n = 1; n <= o.max_n.value_or(6); ++n)
        for (Basis b : {Basis::h, Basis::e})
            checks.push_back([n, b]() -> Outcome {
                const std::string tag = std::string("basis ") + to_string(b) + " n=" + std::to_string(n);
                const Partition shape = b == Basis::h ? Partition{2 * n, 2 * n} : two_column_hook(2 * n, 0);
                const auto found = enumerate_yamanouchi_domino_tableaux(shape);
                if (found.size() != static_cast<std::size_t>(n + 1))
                    return tag + ": " + std::to_string(found.size()) + " Yamanouchi tableaux, expected " +
                           std::to_string(n + 1);
                for (int j = 0; j <= n; ++j) {
                    const DominoTableau member = b == Basis::h ? h_family_member(n, j) : e_family_member(n, j);
                    if (std::find(found.begin(), found.end(), member) == found.end())
                        return tag + " j=" + std::to_string(j) + ": family member missing: " + to_json(member);
                    if (cospin(member) != j)
                        return tag + " j=" + std::to_string(j) + ": cospin " + std::to_string(cospin(member));
                    const Partition expected = b == Basis::h ? Partition{2 * n - j, j} : two_column_hook(n - j, 2 * j);
                    if (Composition(expected) != weight(member))
                        return tag + " j=" + std::to_string(j) + ": weight " + weight(member).to_string();
                }
                return compare_tables(tag + " cospin buckets", littlewood_via_domino(n, b),
                                      decompose_square(b, Partition{n}));
            });
    return checks;
}

std::vector<Check> symantisym_checks(const SuiteOptions& o) {
    struct Named {
        const char* name;
        SymFunc f;
    };
    auto gens = std::make_shared<const std::vector<Named>>(std::vector<Named>{
        {"h1", generator(SymBasis::h, {1})}, {"h2", generator(SymBasis::h, {2})}, {"e2", generator(SymBasis::e, {2})}});
    std::vector<Check> checks;
    std::vector<std::size_t> pick;
    std::function<void(int)> rec = [&](int left) {
        if (!pick.empty())
            checks.push_back([gens, pick]() -> Outcome {
                std::vector<SymFunc> fs;
                std::string tag;
                for (std::size_t k : pick) {
                    fs.push_back((*gens)[k].f);
                    tag += (tag.empty() ? "" : "*") + std::string((*gens)[k].name);
                }
                if (verify_symantisym(fs)) return std::nullopt;
                return "factors " + tag + ": identity fails";
            });
        if (left == 0) return;
        for (std::size_t k = 0; k < gens->size(); ++k) {
            pick.push_back(k);
            rec(left - 1);
            pick.pop_back();
        }
    };
    rec(o.max_n.value_or(3));
    return checks;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"littlewood", "oracle",  "rsk-roundtrip", "jdt-order",
                                                "corollary-qi", "domino", "symantisym"};
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& o) {
    std::vector<Check> checks;
    if (name == "littlewood") checks = littlewood_checks(o);
    else if (name == "oracle") checks = oracle_checks(o);
    else if (name == "rsk-roundtrip") checks = rsk_roundtrip_checks(o);
    else if (name == "jdt-order") checks = jdt_order_checks(o);
    else if (name == "corollary-qi") checks = corollary_checks(o);
    else if (name == "domino") checks = domino_checks(o);
    else if (name == "symantisym") checks = symantisym_checks(o);
    else throw InvalidArgument("unknown suite '" + std::string(name) + "'");
    return collect(std::string(name), checks, std::max(1u, o.threads));
}

std::string to_json(const SuiteReport& r, int indent) {
    nlohmann::json j{{"suite", r.suite},
                     {"passed", r.passed()},
                     {"checked", r.checked},
                     {"failed", r.failed},
                     {"counterexamples", r.counterexamples}};
    return j.dump(indent);
}

SignedKostkaTable oracle_table(Basis basis, const Partition& lambda, const Partition& mu) {
    const SymFunc g = generator(basis == Basis::h ? SymBasis::h : SymBasis::e, lambda);
    SquareSplit split = split_square(g);
    if (!mu.empty()) {
        const SymFunc s_mu = generator(SymBasis::s, mu);
        split.sym = s_mu * split.sym;
        split.antisym = s_mu * split.antisym;
    }
    SignedKostkaTable table{basis, lambda, mu, {}};
    auto absorb = [&](const SymFunc& f, bool plus) {
        for (const auto& [nu, c] : schur_expand(f)) {
            if (c.get_den() != 1 || c < 0 || !c.get_num().fits_ulong_p())
                throw InternalError("Schur coefficient of (" + nu.to_string() + ") is " + c.get_str());
            auto& slot = table.entries[nu];
            (plus ? slot.k_plus : slot.k_minus) = c.get_num().get_ui();
        }
    };
    absorb(split.sym, true);
    absorb(split.antisym, false);
    return table;
}

} // namespace plethyx
