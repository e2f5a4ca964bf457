#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "badred/mpoly/mpoly.hpp"

namespace badred {

// Grammar (no implicit multiplication):
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
// Identifiers must be in `vars`, or equal `generator`; the generator (a
// number-field symbol) becomes an extra last variable of the result.
MPoly<Integer> parse_poly(std::string_view text, const std::vector<std::string>& vars,
                          const std::string& generator = "");

// Comma-separated list, each item parsed as above.
std::vector<MPoly<Integer>> parse_poly_list(std::string_view text, const std::vector<std::string>& vars,
                                            const std::string& generator = "");

// Identifiers in order of first appearance, excluding `generator`. When they
// are all of the form <prefix><index>, the full run prefix0..prefixMax.
std::vector<std::string> infer_variables(std::string_view text, const std::string& generator = "");

}  // namespace badred
