#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "plethyx/domino.hpp"
#include "plethyx/error.hpp"
#include "plethyx/io.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/rsk.hpp"
#include "plethyx/sign.hpp"
#include "plethyx/suites.hpp"

using namespace plethyx;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors raised while reading user input are usage errors, not failures.
template <class F>
auto from_input(F&& f) {
    try {
        return f();
    } catch (const InternalError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string read_source(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

unsigned resolve_threads(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (flag < 0) throw UsageError("--threads must be positive");
    if (const char* env = std::getenv("PLETHYX_THREADS"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) throw UsageError("PLETHYX_THREADS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string tableau_text(const Tableau& t) {
    int width = 1;
    for (const auto& row : t.rows())
        for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    for (std::size_t r = 0; r < t.outer().length(); ++r) {
        std::string line;
        for (int c = 0; c < t.inner()[r]; ++c) line += std::string(static_cast<std::size_t>(width), '.') + " ";
        for (int v : t.rows()[r]) {
            std::string s = std::to_string(v);
            line += std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s + " ";
        }
        if (!line.empty()) line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

struct Common {
    std::string format = "json";
    int threads = 0;

    void attach(CLI::App* app, bool with_threads) {
        app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
        if (with_threads) app->add_option("--threads", threads, "Worker threads (default: PLETHYX_THREADS or all cores)");
    }
    bool json_out() const { return format == "json"; }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decomposition of s_2[g] and s_11[g] for g = h_lambda, e_lambda"};
    app.require_subcommand(1);

    // decompose
    Common dec_common;
    std::string dec_basis = "h", dec_lambda, dec_mu;
    auto* dec = app.add_subcommand("decompose", "Schur expansion of the symmetric and antisymmetric parts of g^2");
    dec->add_option("--basis", dec_basis, "h or e")->check(CLI::IsMember({"h", "e"}));
    dec->add_option("--lambda", dec_lambda, "Partition, e.g. 2,1")->required();
    dec->add_option("--mu", dec_mu, "Optional skew factor s_mu");
    dec_common.attach(dec, true);

    // rectify
    Common rect_common;
    std::string rect_input = "-", rect_inline;
    bool rect_trace = false;
    auto* rect = app.add_subcommand("rectify", "Jeu de taquin rectification of a skew tableau");
    rect->add_option("--input", rect_input, "Tableau JSON file ('-' for stdin)");
    rect->add_option("--tableau", rect_inline, "Tableau JSON given inline");
    rect->add_flag("--trace", rect_trace, "Emit every slide");
    rect_common.attach(rect, false);

    // rsk
    Common rsk_common;
    std::string rsk_biword, rsk_burge, rsk_inverse_path;
    bool rsk_tilde_flag = false;
    auto* rskc = app.add_subcommand("rsk", "RSK and RSK~ insertion and their inverses");
    auto* bw = rskc->add_option("--biword", rsk_biword, "Biword \"u1,u2,.../v1,v2,...\"");
    auto* bu = rskc->add_option("--burge", rsk_burge, "Burge word \"u1,u2,.../v1,v2,...\"");
    auto* inv = rskc->add_option("--inverse", rsk_inverse_path, "JSON file with {\"P\", \"Q\"} to invert ('-' for stdin)");
    rskc->add_flag("--tilde", rsk_tilde_flag, "With --inverse: invert RSK~ instead of RSK");
    bw->excludes(bu)->excludes(inv);
    bu->excludes(inv);
    rsk_common.attach(rskc, false);

    // enumerate
    Common enum_common;
    std::string enum_shape, enum_inner, enum_content;
    bool enum_count_only = false;
    auto* en = app.add_subcommand("enumerate", "Semistandard tableaux of a skew shape with given content");
    en->add_option("--shape", enum_shape, "Outer partition")->required();
    en->add_option("--inner", enum_inner, "Inner partition");
    en->add_option("--content", enum_content, "Content, e.g. 2,2,1,1")->required();
    en->add_flag("--count", enum_count_only, "Print only the number of tableaux");
    enum_common.attach(en, false);

    // domino
    Common dom_common;
    int dom_n = 1;
    std::string dom_basis = "h";
    bool dom_render = false, dom_all = false;
    auto* dom = app.add_subcommand("domino", "Yamanouchi domino tableaux of shape (2n,2n) or (2^2n)");
    dom->add_option("--n", dom_n, "n")->check(CLI::PositiveNumber);
    dom->add_option("--basis", dom_basis, "h for (2n,2n), e for (2^2n)")->check(CLI::IsMember({"h", "e"}));
    dom->add_flag("--render", dom_render, "Draw each tableau");
    dom->add_flag("--summary", dom_all, "Print the cospin-parity table instead of the tableaux");
    dom_common.attach(dom, true);

    // verify
    Common ver_common;
    std::string ver_suite;
    int ver_max_n = 0, ver_max_weight = 0, ver_max_mu = 0;
    std::size_t ver_count = 0;
    std::uint64_t ver_seed = 7;
    auto* ver = app.add_subcommand("verify", "Run a cross-check suite");
    ver->add_option("--suite", ver_suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--max-n", ver_max_n, "Largest n (littlewood, domino) or factor count (symantisym)");
    ver->add_option("--max-weight", ver_max_weight, "Largest |lambda| (oracle, corollary-qi)");
    ver->add_option("--max-mu", ver_max_mu, "Largest |mu| for skew products (oracle)");
    ver->add_option("--count", ver_count, "Random cases (rsk-roundtrip, jdt-order, corollary-qi)");
    ver->add_option("--seed", ver_seed, "Seed for random cases");
    ver_common.attach(ver, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*dec) {
            const Basis basis = from_input([&] { return parse_basis(dec_basis); });
            const Partition lambda = from_input([&] { return parse_partition(dec_lambda); });
            const Partition mu = from_input([&] { return parse_partition(dec_mu); });
            const unsigned threads = resolve_threads(dec_common.threads);
            const auto table = decompose_square(basis, lambda, mu, threads);
            std::cout << (dec_common.json_out() ? to_json(table, 2) + "\n" : to_text(table));
            return kOk;
        }

        if (*rect) {
            const Tableau t = from_input([&] { return parse_tableau(rect_inline.empty() ? read_source(rect_input) : rect_inline); });
            if (rect_trace) {
                const auto frames = rectify_traced(t);
                if (rect_common.json_out()) {
                    std::cout << to_json(frames, 2) << '\n';
                } else {
                    std::cout << tableau_text(t);
                    for (const auto& f : frames)
                        std::cout << "\nslide at (" << f.start_corner.row << "," << f.start_corner.col << ")\n"
                                  << tableau_text(f.result);
                }
                return kOk;
            }
            const Tableau r = rectify(t);
            std::cout << (rect_common.json_out() ? to_json(r, 2) + "\n" : tableau_text(r));
            return kOk;
        }

        if (*rskc) {
            if (!rsk_inverse_path.empty()) {
                const RskPair pq = from_input([&] { return parse_rsk_pair(read_source(rsk_inverse_path)); });
                // A pair that is not in the image of the bijection is malformed input.
                const std::string word = from_input([&] {
                    return rsk_tilde_flag ? format_biword(rsk_tilde_inverse(pq).letters())
                                          : format_biword(rsk_inverse(pq).letters());
                });
                if (rsk_common.json_out())
                    std::cout << json{{rsk_tilde_flag ? "burge" : "biword", word}}.dump(2) << '\n';
                else
                    std::cout << word << '\n';
                return kOk;
            }
            RskPair pq;
            if (!rsk_burge.empty()) {
                const BurgeWord w = from_input([&] { return parse_burge_word(rsk_burge); });
                pq = rsk_tilde(w);
            } else if (!rsk_biword.empty()) {
                const Biword w = from_input([&] { return parse_biword(rsk_biword); });
                pq = rsk(w);
            } else {
                throw UsageError("rsk needs --biword, --burge or --inverse");
            }
            if (rsk_common.json_out())
                std::cout << to_json(pq, 2) << '\n';
            else
                std::cout << "P\n" << tableau_text(pq.p) << "Q\n" << tableau_text(pq.q);
            return kOk;
        }

        if (*en) {
            const SkewShape shape = from_input([&] {
                return SkewShape(parse_partition(enum_shape), parse_partition(enum_inner));
            });
            const Composition content = from_input([&] { return parse_composition(enum_content); });
            if (enum_count_only) {
                const auto n = kostka(shape, content);
                std::cout << (enum_common.json_out() ? json{{"count", n}}.dump(2) : std::to_string(n)) << '\n';
                return kOk;
            }
            const auto all = enumerate_ssyt(shape, content);
            if (enum_common.json_out()) {
                json list = json::array();
                for (const auto& t : all) list.push_back(json::parse(to_json(t)));
                std::cout << json{{"shape", shape.outer().parts()},
                                  {"inner", shape.inner().parts()},
                                  {"content", content.counts()},
                                  {"count", all.size()},
                                  {"tableaux", std::move(list)}}
                                 .dump(2)
                          << '\n';
            } else {
                for (std::size_t k = 0; k < all.size(); ++k) std::cout << (k ? "\n" : "") << tableau_text(all[k]);
                std::cout << "count " << all.size() << '\n';
            }
            return kOk;
        }

        if (*dom) {
            const Basis basis = from_input([&] { return parse_basis(dom_basis); });
            const unsigned threads = resolve_threads(dom_common.threads);
            if (dom_all) {
                const auto table = littlewood_via_domino(dom_n, basis, threads);
                std::cout << (dom_common.json_out() ? to_json(table, 2) + "\n" : to_text(table));
                return kOk;
            }
            const Partition shape = basis == Basis::h ? Partition{2 * dom_n, 2 * dom_n} : two_column_hook(2 * dom_n, 0);
            const auto found = enumerate_yamanouchi_domino_tableaux(shape, threads);
            if (dom_common.json_out() && !dom_render) {
                json list = json::array();
                for (const auto& d : found)
                    list.push_back(json{{"tableau", json::parse(to_json(d))},
                                        {"word", domino_reading_word(d)},
                                        {"weight", weight(d).counts()},
                                        {"cospin", cospin(d)}});
                std::cout << list.dump(2) << '\n';
                return kOk;
            }
            for (std::size_t k = 0; k < found.size(); ++k) {
                const auto& d = found[k];
                if (k) std::cout << '\n';
                std::cout << "weight (" << Partition(weight(d).counts()).to_string() << ")  cospin " << cospin(d)
                          << "  part " << (cospin(d) % 2 == 0 ? "s2" : "s11") << '\n'
                          << render_ascii(d);
            }
            return kOk;
        }

        if (*ver) {
            SuiteOptions o;
            if (ver_max_n > 0) o.max_n = ver_max_n;
            if (ver_max_weight > 0) o.max_weight = ver_max_weight;
            if (ver_count > 0) o.count = ver_count;
            o.max_mu = ver_max_mu;
            o.seed = ver_seed;
            o.threads = resolve_threads(ver_common.threads);
            const SuiteReport report = run_suite(ver_suite, o);
            if (ver_common.json_out()) {
                std::cout << to_json(report, 2) << '\n';
            } else {
                std::cout << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.checked
                          << " checked, " << report.failed << " failed)\n";
                for (const auto& c : report.counterexamples) std::cout << "  " << c << '\n';
            }
            return report.passed() ? kOk : kFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
