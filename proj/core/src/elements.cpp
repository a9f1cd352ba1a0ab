#include "matprov/elements.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace matprov {

namespace {

constexpr std::array<std::string_view, 118> kElements = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
    "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
    "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
    "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
    "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
    "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
    "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
    "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
};

const std::unordered_set<std::string_view>& element_set() {
  static const std::unordered_set<std::string_view> set(kElements.begin(),
                                                        kElements.end());
  return set;
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

// Characters that structure a formula and never carry element information.
bool is_structural(char c) {
  return (c >= '0' && c <= '9') || c == '.' || c == ',' || c == '(' || c == ')' ||
         c == '[' || c == ']' || c == '{' || c == '}' || c == '-' || c == '+' ||
         c == '/' || c == ':' || c == '=' || c == '*' || c == '\'' ||
         std::isspace(static_cast<unsigned char>(c));
}

}  // namespace

std::span<const std::string_view> element_symbols() { return kElements; }

bool is_element_symbol(std::string_view s) { return element_set().contains(s); }

CompositionElements parse_composition(std::string_view composition) {
  CompositionElements out;
  std::size_t i = 0;
  const std::size_t n = composition.size();
  while (i < n) {
    char c = composition[i];
    if (is_upper(c)) {
      // Longest valid symbol first: try two letters, then one.
      if (i + 1 < n && is_lower(composition[i + 1])) {
        std::string two{c, composition[i + 1]};
        if (is_element_symbol(two)) {
          out.elements.insert(std::move(two));
          i += 2;
          continue;
        }
      }
      std::string one{c};
      if (is_element_symbol(one)) {
        out.elements.insert(std::move(one));
        i += 1;
        continue;
      }
      // Not an element: report the whole letter run once.
      std::size_t start = i;
      ++i;
      while (i < n && is_lower(composition[i])) ++i;
      out.warnings.emplace_back(composition.substr(start, i - start));
      continue;
    }
    if (is_structural(c)) {
      ++i;
      continue;
    }
    // Stray lowercase letters ("x") and non-ASCII tokens ("δ") are skipped
    // but reported.
    std::size_t start = i;
    ++i;
    if (static_cast<unsigned char>(c) >= 0x80) {
      // consume the rest of the UTF-8 sequence
      while (i < n && (static_cast<unsigned char>(composition[i]) & 0xC0) == 0x80) ++i;
    } else {
      while (i < n && is_lower(composition[i])) ++i;
    }
    out.warnings.emplace_back(composition.substr(start, i - start));
  }
  return out;
}

std::pair<std::string, std::string> parse_label(std::string_view label) {
  std::size_t pos = label.find('_');
  if (pos == std::string_view::npos) return {std::string(label), std::string()};
  return {std::string(label.substr(0, pos)), std::string(label.substr(pos + 1))};
}

}  // namespace matprov
