//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "molparse/errors.hpp"
#include "molparse/molecule.hpp"

namespace molparse {

/// One atom constraint of a functional-group pattern. Unspecified
/// aromaticity matches both; charge defaults to neutral; degree bounds
/// count heavy-atom neighbors.
struct PatternAtom {
  std::vector<std::string> elements; // any of these symbols
  std::optional<bool> aromatic;
  int charge = 0;
  int min_degree = 0;
  std::optional<int> max_degree;
};

struct PatternBond {
  int i = 0;
  int j = 0;
  BondOrder order = BondOrder::Single;
};

struct FunctionalGroupPattern {
  std::string name;
  std::vector<PatternAtom> atoms;
  std::vector<PatternBond> bonds;
};

namespace detail {

inline bool atom_matches(const PatternAtom &pa, const Molecule &mol, int idx) {
  const Atom &a = mol.atoms[idx];
  if (a.is_wildcard())
    return false;
  if (std::find(pa.elements.begin(), pa.elements.end(), a.element) ==
      pa.elements.end())
    return false;
  if (pa.aromatic && *pa.aromatic != a.aromatic)
    return false;
  if (a.formal_charge != pa.charge)
    return false;
  int deg = mol.degree(idx);
  if (deg < pa.min_degree)
    return false;
  if (pa.max_degree && deg > *pa.max_degree)
    return false;
  return true;
}

inline bool bond_matches(const PatternBond &pb, const Molecule &mol, int a,
                         int b) {
  const Bond *mb = mol.find_bond(a, b);
  return mb && mb->order == pb.order;
}

} // namespace detail

/// Backtracking subgraph-isomorphism test: does an injective mapping of
/// pattern atoms onto molecule atoms exist that satisfies every atom
/// and bond constraint? Pattern atoms are tried rarest-candidate-first,
/// keeping the pattern connected along the search order.
inline bool match_pattern(const Molecule &mol,
                          const FunctionalGroupPattern &pattern) {
  const int pn = static_cast<int>(pattern.atoms.size());
  if (pn == 0)
    return false;

  // Candidate lists per pattern atom.
  std::vector<std::vector<int>> candidates(pn);
  for (int p = 0; p < pn; ++p) {
    for (int m = 0; m < mol.atom_count(); ++m)
      if (detail::atom_matches(pattern.atoms[p], mol, m))
        candidates[p].push_back(m);
    if (candidates[p].empty())
      return false;
  }

  // Search order: rarest first, subsequent atoms adjacent to a placed one.
  std::vector<std::vector<int>> padj(pn);
  for (const auto &b : pattern.bonds) {
    padj[b.i].push_back(b.j);
    padj[b.j].push_back(b.i);
  }
  std::vector<int> order;
  std::vector<char> placed(pn, 0);
  auto pick = [&](bool need_adjacent) {
    int best = -1;
    for (int p = 0; p < pn; ++p) {
      if (placed[p])
        continue;
      if (need_adjacent) {
        bool adj = false;
        for (int q : padj[p])
          if (placed[q])
            adj = true;
        if (!adj)
          continue;
      }
      if (best == -1 || candidates[p].size() < candidates[best].size())
        best = p;
    }
    return best;
  };
  while (static_cast<int>(order.size()) < pn) {
    int p = pick(!order.empty());
    if (p == -1)
      p = pick(false); // disconnected pattern; still handled
    placed[p] = 1;
    order.push_back(p);
  }

  std::vector<int> map(pn, -1);
  std::vector<char> used(mol.atom_count(), 0);
  std::function<bool(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size())
      return true;
    int p = order[depth];
    for (int m : candidates[p]) {
      if (used[m])
        continue;
      bool ok = true;
      for (const auto &b : pattern.bonds) {
        int other = b.i == p ? b.j : (b.j == p ? b.i : -1);
        if (other == -1 || map[other] == -1)
          continue;
        if (!detail::bond_matches(b, mol, m, map[other])) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      map[p] = m;
      used[m] = 1;
      if (descend(depth + 1))
        return true;
      used[m] = 0;
      map[p] = -1;
    }
    return false;
  };
  return descend(0);
}

/// Shipped default library: 16 drug-like functional groups in the same
/// text format load_group_library reads.
inline const char *default_group_library_text() {
  return R"(# molparse functional group library
# group <name> / atom <idx> <elements> [key=value ...] / bond <i> <j> <order> / end

group hydroxyl
atom 0 C
atom 1 O max_degree=1 aromatic=false
bond 0 1 single
end

group carboxylic_acid
atom 0 C aromatic=false
atom 1 O max_degree=1
atom 2 O max_degree=1
bond 0 1 double
bond 0 2 single
end

group ester
atom 0 C aromatic=false
atom 1 O max_degree=1
atom 2 O min_degree=2 max_degree=2
atom 3 C
bond 0 1 double
bond 0 2 single
bond 2 3 single
end

group ether
atom 0 C
atom 1 O min_degree=2 max_degree=2 aromatic=false
atom 2 C
bond 0 1 single
bond 1 2 single
end

group aldehyde
atom 0 C
atom 1 C max_degree=2 aromatic=false
atom 2 O max_degree=1
bond 0 1 single
bond 1 2 double
end

group ketone
atom 0 C
atom 1 C min_degree=3 max_degree=3 aromatic=false
atom 2 C
atom 3 O max_degree=1
bond 0 1 single
bond 1 2 single
bond 1 3 double
end

group amide
atom 0 C aromatic=false
atom 1 O max_degree=1
atom 2 N aromatic=false
bond 0 1 double
bond 0 2 single
end

group primary_amine
atom 0 C
atom 1 N max_degree=1 aromatic=false
bond 0 1 single
end

group secondary_amine
atom 0 C
atom 1 N min_degree=2 max_degree=2 aromatic=false
atom 2 C
bond 0 1 single
bond 1 2 single
end

group nitrile
atom 0 C aromatic=false
atom 1 N max_degree=1 aromatic=false
bond 0 1 triple
end

group nitro
atom 0 N charge=1 aromatic=false
atom 1 O max_degree=1
atom 2 O max_degree=1 charge=-1
bond 0 1 double
bond 0 2 single
end

group sulfonamide
atom 0 S aromatic=false
atom 1 O max_degree=1
atom 2 O max_degree=1
atom 3 N aromatic=false
bond 0 1 double
bond 0 2 double
bond 0 3 single
end

group thiol
atom 0 C
atom 1 S max_degree=1 aromatic=false
bond 0 1 single
end

group halogen
atom 0 C
atom 1 F,Cl,Br,I max_degree=1
bond 0 1 single
end

group aromatic_ring_carbon
atom 0 C aromatic=true
end

group phenol
atom 0 C aromatic=true
atom 1 O max_degree=1 aromatic=false
bond 0 1 single
end
)";
}

/// Parses the block text format of a group library. Validates names,
/// connectivity, and sizes; errors carry the 1-based line number.
inline std::vector<FunctionalGroupPattern>
parse_group_library(std::istream &in) {
  std::vector<FunctionalGroupPattern> out;
  std::optional<FunctionalGroupPattern> current;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;

  auto finish = [&](std::size_t at) {
    if (!current)
      throw ConfigError("'end' without an open group", at);
    if (current->atoms.empty() || current->atoms.size() > 8)
      throw ConfigError("group '" + current->name +
                            "' must have between 1 and 8 atoms",
                        at);
    // connectivity
    std::vector<char> seen(current->atoms.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto &b : current->bonds) {
        int w = b.i == v ? b.j : (b.j == v ? b.i : -1);
        if (w != -1 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (char s : seen)
      if (!s)
        throw ConfigError("group '" + current->name + "' is not connected", at);
    out.push_back(std::move(*current));
    current.reset();
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#')
      continue;
    if (word == "group") {
      if (current)
        throw ConfigError("nested 'group'", lineno);
      std::string name;
      if (!(ls >> name))
        throw ConfigError("'group' requires a name", lineno);
      if (!names.insert(name).second)
        throw ConfigError("duplicate group name '" + name + "'", lineno);
      current = FunctionalGroupPattern{};
      current->name = name;
    } else if (word == "atom") {
      if (!current)
        throw ConfigError("'atom' outside a group", lineno);
      int idx;
      std::string elems;
      if (!(ls >> idx >> elems) ||
          idx != static_cast<int>(current->atoms.size()))
        throw ConfigError("atom indices must be sequential from 0", lineno);
      PatternAtom pa;
      std::istringstream es(elems);
      std::string e;
      while (std::getline(es, e, ','))
        pa.elements.push_back(e);
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw ConfigError("expected key=value, got '" + kv + "'", lineno);
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        try {
          if (key == "aromatic")
            pa.aromatic = val == "true";
          else if (key == "charge")
            pa.charge = std::stoi(val);
          else if (key == "min_degree")
            pa.min_degree = std::stoi(val);
          else if (key == "max_degree")
            pa.max_degree = std::stoi(val);
          else
            throw ConfigError("unknown atom key '" + key + "'", lineno);
        } catch (const std::invalid_argument &) {
          throw ConfigError("bad value for '" + key + "'", lineno);
        }
      }
      current->atoms.push_back(std::move(pa));
    } else if (word == "bond") {
      if (!current)
        throw ConfigError("'bond' outside a group", lineno);
      int i, j;
      std::string ord;
      if (!(ls >> i >> j >> ord))
        throw ConfigError("bond needs '<i> <j> <order>'", lineno);
      BondOrder order;
      if (ord == "single")
        order = BondOrder::Single;
      else if (ord == "double")
        order = BondOrder::Double;
      else if (ord == "triple")
        order = BondOrder::Triple;
      else if (ord == "aromatic")
        order = BondOrder::Aromatic;
      else
        throw ConfigError("unknown bond order '" + ord + "'", lineno);
      if (i < 0 || j < 0 || i >= static_cast<int>(current->atoms.size()) ||
          j >= static_cast<int>(current->atoms.size()) || i == j)
        throw ConfigError("bond endpoints out of range", lineno);
      current->bonds.push_back(PatternBond{i, j, order});
    } else if (word == "end") {
      finish(lineno);
    } else {
      throw ConfigError("unknown directive '" + word + "'", lineno);
    }
  }
  if (current)
    throw ConfigError("unterminated group '" + current->name + "'", lineno);
  if (out.empty())
    throw ConfigError("group library defines no groups", lineno);
  return out;
}

inline std::vector<FunctionalGroupPattern>
load_group_library(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open group library: " + path);
  return parse_group_library(in);
}

inline std::vector<FunctionalGroupPattern> default_group_library() {
  std::istringstream in(default_group_library_text());
  return parse_group_library(in);
}

} // namespace molparse
