//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace molparse {

/// Wildcard attachment-point pseudo element used by fragment
/// serialization ("[*]").
inline constexpr std::string_view kWildcard = "*";

inline bool is_periodic_symbol(std::string_view sym) {
  // Periodic table symbols up to Og, plus the wildcard.
  static const std::array<std::string_view, 119> kSymbols = {
      "*",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
      "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
      "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
      "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
      "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
      "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
      "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
      "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
      "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
      "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};
  for (auto s : kSymbols)
    if (s == sym)
      return true;
  return false;
}

/// Elements writable without brackets.
inline bool is_organic_subset(std::string_view sym) {
  return sym == "B" || sym == "C" || sym == "N" || sym == "O" || sym == "P" ||
         sym == "S" || sym == "F" || sym == "Cl" || sym == "Br" || sym == "I";
}

/// Elements that may carry the aromatic flag at all.
inline bool is_aromatic_eligible(std::string_view sym) {
  return sym == "B" || sym == "C" || sym == "N" || sym == "O" || sym == "P" ||
         sym == "S" || sym == "Se" || sym == "As";
}

/// Elements writable as bare lowercase letters (aromatic organic subset).
inline bool is_aromatic_organic(std::string_view sym) {
  return sym == "b" || sym == "c" || sym == "n" || sym == "o" || sym == "p" ||
         sym == "s";
}

/// Allowed valences for the organic-subset default table, ascending.
/// Empty for elements without a table entry (bracket-only elements).
inline const std::vector<int> &allowed_valences(std::string_view sym) {
  static const std::vector<int> kB = {3};
  static const std::vector<int> kC = {4};
  static const std::vector<int> kN = {3};
  static const std::vector<int> kO = {2};
  static const std::vector<int> kP = {3, 5};
  static const std::vector<int> kS = {2, 4, 6};
  static const std::vector<int> kHal = {1};
  static const std::vector<int> kNone = {};
  if (sym == "B")
    return kB;
  if (sym == "C")
    return kC;
  if (sym == "N")
    return kN;
  if (sym == "O")
    return kO;
  if (sym == "P")
    return kP;
  if (sym == "S")
    return kS;
  if (sym == "F" || sym == "Cl" || sym == "Br" || sym == "I")
    return kHal;
  return kNone;
}

} // namespace molparse
