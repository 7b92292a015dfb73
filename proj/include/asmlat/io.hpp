#pragma once

// Text and JSON formats.
//
// Matrix text: an optional "n <size>" line, then n lines of n integers.
// Permutation shorthand: "perm:3412" (digits, n <= 9) or "perm:3,4,1,2".
// Matrix JSON: {"n": 3, "entries": [[0,1,0],[1,-1,1],[0,1,0]]}.

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "asmlat/asm.hpp"
#include "asmlat/hasse.hpp"
#include "asmlat/poset.hpp"
#include "asmlat/polynomial.hpp"
#include "asmlat/statistics.hpp"

namespace asmlat {

/// Accepts a permutation token with or without the "perm:" prefix.
Permutation parse_permutation(std::string_view token);

/// Accepts any of the three formats above. Throws ParseError on malformed
/// input and the usual validation errors on non-ASMs.
Asm parse_matrix(std::string_view text);
Asm read_matrix(std::istream& in);

std::string format_matrix_text(const Asm& a);

nlohmann::json to_json(const Asm& a);
nlohmann::json to_json(const StatRecord& s);
nlohmann::json to_json(const CoverEdge& e);
nlohmann::json to_json(const HalfIntPolynomial& p);
nlohmann::json to_json(const BivariatePolynomial& p);
nlohmann::json to_json(const HasseGraph& g);

}  // namespace asmlat
