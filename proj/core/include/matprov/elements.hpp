#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matprov {

// The 118 IUPAC element symbols, ordered by atomic number.
std::span<const std::string_view> element_symbols();

bool is_element_symbol(std::string_view s);

struct CompositionElements {
  std::set<std::string> elements;
  std::vector<std::string> warnings;  // tokens that looked like symbols but are not
};

// Greedy tokenization of a chemical composition string into element symbols.
// Two-letter symbols win over one-letter prefixes ("Co" beats "C"+"o");
// digits, decimals, brackets and stoichiometric placeholders are skipped.
// Presence only: "Cu2S" and "CuS" yield the same set.
CompositionElements parse_composition(std::string_view composition);

// Splits a procedure label "<composition>_<characteristic>" at the first
// underscore. Labels without an underscore yield an empty characteristic.
std::pair<std::string, std::string> parse_label(std::string_view label);

}  // namespace matprov
