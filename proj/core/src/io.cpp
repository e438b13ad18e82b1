#include "plethyx/io.hpp"

#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "plethyx/error.hpp"

namespace plethyx {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    text = trim(text);
    if (text.empty()) return out;
    while (true) {
        auto comma = text.find(',');
        std::string_view token = trim(text.substr(0, comma));
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(std::string("malformed ") + what + ": '" + std::string(token) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <class T, class Fn>
T guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

json cell_json(Cell c) { return json::array({c.row, c.col}); }

Cell cell_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("a cell is a pair [row, col]");
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json tableau_json(const Tableau& t) {
    return json{{"inner", t.inner().parts()}, {"rows", t.rows()}};
}

Tableau tableau_from(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw ParseError("a tableau is an object with a \"rows\" field");
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    std::vector<int> inner = j.contains("inner") ? j.at("inner").get<std::vector<int>>() : std::vector<int>{};
    std::vector<int> outer(std::max(rows.size(), inner.size()), 0);
    for (std::size_t r = 0; r < outer.size(); ++r)
        outer[r] = (r < inner.size() ? inner[r] : 0) + static_cast<int>(r < rows.size() ? rows[r].size() : 0);
    rows.resize(outer.size());
    Partition outer_p(outer);
    while (rows.size() > outer_p.length()) rows.pop_back();
    return Tableau(SkewShape(std::move(outer_p), Partition(std::move(inner))), std::move(rows));
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

Integer integer_from(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer string");
        return z;
    }
    throw ParseError("expected an integer or a decimal string");
}

SymBasis sym_basis_from(const std::string& s) {
    if (s == "m") return SymBasis::m;
    if (s == "h") return SymBasis::h;
    if (s == "e") return SymBasis::e;
    if (s == "p") return SymBasis::p;
    if (s == "s") return SymBasis::s;
    throw ParseError("unknown basis '" + s + "'");
}

std::string parens(const Partition& p) { return "(" + p.to_string() + ")"; }

std::vector<BiLetter> parse_letters(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("a biword is written \"u1,u2,.../v1,v2,...\"");
    auto top = parse_int_list(text.substr(0, slash), "biword");
    auto bottom = parse_int_list(text.substr(slash + 1), "biword");
    if (top.size() != bottom.size()) throw ParseError("biword rows have different lengths");
    std::vector<BiLetter> letters;
    for (std::size_t k = 0; k < top.size(); ++k) letters.push_back({top[k], bottom[k]});
    return letters;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

} // namespace

Partition parse_partition(std::string_view text) {
    auto parts = parse_int_list(text, "partition");
    try {
        return Partition(std::move(parts));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("not a partition: ") + e.what());
    }
}

Composition parse_composition(std::string_view text) {
    auto counts = parse_int_list(text, "content");
    try {
        return Composition(std::move(counts));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("not a content vector: ") + e.what());
    }
}

Basis parse_basis(std::string_view text) {
    if (text == "h") return Basis::h;
    if (text == "e") return Basis::e;
    throw ParseError("basis must be h or e, got '" + std::string(text) + "'");
}

Tableau parse_tableau(std::string_view json_text) {
    json j = parse_json(json_text);
    Tableau t = guarded<Tableau>("tableau", [&] { return tableau_from(j); });
    if (!t.is_semistandard()) throw ParseError("tableau is not semistandard");
    return t;
}

std::string to_json(const Tableau& t, int indent) { return dump(tableau_json(t), indent); }

Biword parse_biword(std::string_view text) { return Biword(parse_letters(text)); }

BurgeWord parse_burge_word(std::string_view text) { return BurgeWord(parse_letters(text)); }

std::string format_biword(const std::vector<BiLetter>& letters) {
    std::ostringstream top, bottom;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) {
            top << ',';
            bottom << ',';
        }
        top << letters[k].top;
        bottom << letters[k].bottom;
    }
    return top.str() + "/" + bottom.str();
}

std::string to_json(const RskPair& pq, int indent) {
    return dump(json{{"P", tableau_json(pq.p)}, {"Q", tableau_json(pq.q)}}, indent);
}

RskPair parse_rsk_pair(std::string_view json_text) {
    json j = parse_json(json_text);
    return guarded<RskPair>("tableau pair", [&] { return RskPair{tableau_from(j.at("P")), tableau_from(j.at("Q"))}; });
}

std::string to_json(const SignedKostkaTable& table, int indent) {
    json terms = json::array();
    for (const auto& [nu, c] : table.entries)
        terms.push_back(json{{"nu", nu.parts()}, {"s2", c.k_plus}, {"s11", c.k_minus}});
    json j{{"basis", to_string(table.basis)},
           {"lambda", table.lambda.parts()},
           {"mu", table.mu.parts()},
           {"terms", std::move(terms)}};
    return dump(j, indent);
}

SignedKostkaTable parse_signed_table(std::string_view json_text) {
    json j = parse_json(json_text);
    return guarded<SignedKostkaTable>("signed Kostka table", [&] {
        SignedKostkaTable t;
        t.basis = parse_basis(j.at("basis").get<std::string>());
        t.lambda = Partition(j.at("lambda").get<std::vector<int>>());
        t.mu = Partition(j.value("mu", std::vector<int>{}));
        for (const auto& term : j.at("terms")) {
            SignCounts c{term.at("s2").get<std::uint64_t>(), term.at("s11").get<std::uint64_t>()};
            t.entries.emplace(Partition(term.at("nu").get<std::vector<int>>()), c);
        }
        return t;
    });
}

std::string to_text(const SignedKostkaTable& table) {
    std::size_t width = 5;
    for (const auto& [nu, c] : table.entries) width = std::max(width, parens(nu).size());
    std::ostringstream os;
    os << "basis " << to_string(table.basis) << "  lambda " << parens(table.lambda);
    if (!table.mu.empty()) os << "  mu " << parens(table.mu);
    os << '\n';
    os << std::left << std::setw(static_cast<int>(width)) << "nu" << std::right << std::setw(6) << "s2"
       << std::setw(6) << "s11" << '\n';
    std::uint64_t plus = 0, minus = 0;
    for (const auto& [nu, c] : table.entries) {
        os << std::left << std::setw(static_cast<int>(width)) << parens(nu) << std::right << std::setw(6) << c.k_plus
           << std::setw(6) << c.k_minus << '\n';
        plus += c.k_plus;
        minus += c.k_minus;
    }
    os << std::left << std::setw(static_cast<int>(width)) << "total" << std::right << std::setw(6) << plus
       << std::setw(6) << minus << '\n';
    return os.str();
}

std::string to_json(const SymFunc& f, int indent) { return to_json(SymBasis::p, f.terms(), indent); }

std::string to_json(SymBasis basis, const std::map<Partition, Rational>& coefficients, int indent) {
    json out = json::array();
    for (const auto& [lambda, c] : coefficients)
        out.push_back(json{{"basis", to_string(basis)},
                           {"partition", lambda.parts()},
                           {"numerator", integer_json(c.get_num())},
                           {"denominator", integer_json(c.get_den())}});
    return dump(out, indent);
}

SymFunc parse_symfunc(std::string_view json_text) {
    json j = parse_json(json_text);
    return guarded<SymFunc>("symmetric function", [&] {
        if (!j.is_array()) throw ParseError("a symmetric function is a list of terms");
        SymFunc f;
        for (const auto& term : j) {
            SymBasis b = sym_basis_from(term.at("basis").get<std::string>());
            Rational c(integer_from(term.at("numerator")), integer_from(term.at("denominator")));
            if (c.get_den() == 0) throw ParseError("zero denominator");
            c.canonicalize();
            try {
                f += generator(b, Partition(term.at("partition").get<std::vector<int>>())) * c;
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what());
            }
        }
        return f;
    });
}

std::string to_json(const std::vector<SlideTrace>& frames, int indent) {
    json out = json::array();
    for (const auto& f : frames) {
        json path = json::array();
        for (Cell c : f.path) path.push_back(cell_json(c));
        out.push_back(json{{"corner", cell_json(f.start_corner)}, {"path", std::move(path)}, {"result", tableau_json(f.result)}});
    }
    return dump(out, indent);
}

std::string to_json(const DominoTableau& d, int indent) {
    json dominoes = json::array();
    for (const auto& dom : d.dominoes())
        dominoes.push_back(json{{"cells", json::array({cell_json(dom.first), cell_json(dom.second)})},
                                {"entry", dom.entry},
                                {"orientation", dom.orientation == Orientation::horizontal ? "horizontal" : "vertical"}});
    return dump(json{{"shape", d.shape().parts()}, {"dominoes", std::move(dominoes)}}, indent);
}

DominoTableau parse_domino_tableau(std::string_view json_text) {
    json j = parse_json(json_text);
    return guarded<DominoTableau>("domino tableau", [&] {
        std::vector<Domino> dominoes;
        for (const auto& dj : j.at("dominoes")) {
            const auto& cells = dj.at("cells");
            if (!cells.is_array() || cells.size() != 2) throw ParseError("a domino has exactly two cells");
            const std::string o = dj.at("orientation").get<std::string>();
            if (o != "horizontal" && o != "vertical") throw ParseError("unknown orientation '" + o + "'");
            dominoes.push_back({cell_from(cells.at(0)), cell_from(cells.at(1)), dj.at("entry").get<int>(),
                                o == "horizontal" ? Orientation::horizontal : Orientation::vertical});
        }
        return DominoTableau(Partition(j.at("shape").get<std::vector<int>>()), std::move(dominoes));
    });
}

} // namespace plethyx
