#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plethyx/domino.hpp"
#include "plethyx/jdt.hpp"
#include "plethyx/rsk.hpp"
#include "plethyx/sign.hpp"
#include "plethyx/symfunc.hpp"

namespace plethyx {

/// "3,2,1"; the empty string is the empty partition. Throws ParseError.
Partition parse_partition(std::string_view text);
/// "2,0,1": letter multiplicities, zeros allowed.
Composition parse_composition(std::string_view text);
Basis parse_basis(std::string_view text);

/// {"inner": [...], "rows": [[...], ...]}; "inner" may be omitted.
/// Throws ParseError unless the filling is semistandard.
Tableau parse_tableau(std::string_view json_text);
std::string to_json(const Tableau& t, int indent = -1);

/// "u1,u2,.../v1,v2,..."
Biword parse_biword(std::string_view text);
BurgeWord parse_burge_word(std::string_view text);
std::string format_biword(const std::vector<BiLetter>& letters);

/// {"P": tableau, "Q": tableau}
std::string to_json(const RskPair& pq, int indent = -1);
RskPair parse_rsk_pair(std::string_view json_text);

/// {"basis", "lambda", "mu", "terms": [{"nu", "s2", "s11"}, ...]}
std::string to_json(const SignedKostkaTable& table, int indent = -1);
SignedKostkaTable parse_signed_table(std::string_view json_text);
/// Aligned plain-text table, one row per nu.
std::string to_text(const SignedKostkaTable& table);

/// [{"basis", "partition", "numerator", "denominator"}, ...]. Numerators and
/// denominators are JSON integers when they fit in 64 bits, decimal strings otherwise.
std::string to_json(const SymFunc& f, int indent = -1);
std::string to_json(SymBasis basis, const std::map<Partition, Rational>& coefficients, int indent = -1);
/// Accepts any of the bases p, h, e, s; terms are summed.
SymFunc parse_symfunc(std::string_view json_text);

/// [{"corner": [r, c], "path": [[r, c], ...], "result": tableau}, ...]
std::string to_json(const std::vector<SlideTrace>& frames, int indent = -1);

/// {"shape": [...], "dominoes": [{"cells": [[r, c], [r, c]], "entry": k,
/// "orientation": "horizontal" | "vertical"}, ...]}
std::string to_json(const DominoTableau& d, int indent = -1);
DominoTableau parse_domino_tableau(std::string_view json_text);

} // namespace plethyx
