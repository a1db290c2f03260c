//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "molparse/elements.hpp"
#include "molparse/errors.hpp"

namespace molparse {

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

inline const char *bond_order_name(BondOrder o) {
  switch (o) {
  case BondOrder::Single:
    return "single";
  case BondOrder::Double:
    return "double";
  case BondOrder::Triple:
    return "triple";
  case BondOrder::Aromatic:
    return "aromatic";
  }
  return "?";
}

struct Atom {
  std::string element;                // periodic symbol, "*" for wildcard
  bool aromatic = false;
  int formal_charge = 0;
  std::optional<int> isotope;         // mass number, bracket atoms only
  std::optional<int> explicit_h;      // bracket H count; nullopt for bare atoms
  int implicit_h = 0;                 // computed; 0 for bracket atoms
  int index = 0;                      // position in Molecule::atoms

  bool is_wildcard() const { return element == kWildcard; }
  int total_h() const { return implicit_h + explicit_h.value_or(0); }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  bool in_ring = false;

  int other(int idx) const { return idx == a ? b : a; }
};

/// Immutable after construction; all algorithms treat it as read-only.
struct Molecule {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> adjacency; // per-atom list of bond indices

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int bond_count() const { return static_cast<int>(bonds.size()); }

  int heavy_atom_count() const {
    int n = 0;
    for (const auto &a : atoms)
      if (!a.is_wildcard())
        ++n;
    return n;
  }

  int degree(int atom) const { return static_cast<int>(adjacency[atom].size()); }

  const Bond *find_bond(int a, int b) const {
    for (int bi : adjacency[a])
      if (bonds[bi].other(a) == b)
        return &bonds[bi];
    return nullptr;
  }

  std::vector<int> neighbors(int atom) const {
    std::vector<int> out;
    out.reserve(adjacency[atom].size());
    for (int bi : adjacency[atom])
      out.push_back(bonds[bi].other(atom));
    return out;
  }

  /// Appends a bond, keeping adjacency in sync. Rejects self-bonds and
  /// duplicate pairs.
  void add_bond(int a, int b, BondOrder order) {
    if (a == b)
      throw ParseError("self-bond on atom " + std::to_string(a), 0);
    if (find_bond(a, b))
      throw ParseError("duplicate bond " + std::to_string(a) + "-" + std::to_string(b), 0);
    int bi = static_cast<int>(bonds.size());
    bonds.push_back(Bond{a, b, order, false});
    adjacency[a].push_back(bi);
    adjacency[b].push_back(bi);
  }

  int add_atom(Atom atom) {
    atom.index = static_cast<int>(atoms.size());
    atoms.push_back(std::move(atom));
    adjacency.emplace_back();
    return atoms.back().index;
  }

  bool connected() const {
    if (atoms.empty())
      return true;
    std::vector<char> seen(atoms.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int bi : adjacency[v]) {
        int w = bonds[bi].other(v);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == atom_count();
  }
};

/// Marks every bond that lies on some cycle. A bond is in a ring iff it
/// is not a bridge (iterative Tarjan bridge search).
inline void flag_ring_bonds(Molecule &mol) {
  const int n = mol.atom_count();
  for (auto &b : mol.bonds)
    b.in_ring = true;
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v;
    int parent_bond;
    std::size_t next_edge;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1)
      continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame &f = stack.back();
      if (f.next_edge < mol.adjacency[f.v].size()) {
        int bi = mol.adjacency[f.v][f.next_edge++];
        if (bi == f.parent_bond)
          continue;
        int w = mol.bonds[bi].other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, bi, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int pb = f.parent_bond;
        stack.pop_back();
        if (pb != -1) {
          int p = mol.bonds[pb].other(v);
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p])
            mol.bonds[pb].in_ring = false; // bridge
        }
      }
    }
  }
  // Isolated-edge case: a graph with no cycles at all.
  // (handled above: every bridge got cleared)
}

/// Bond-order sum used by the valence model. Aromatic bonds count 1
/// each; aromatic atoms add one for the delocalized system, except
/// atoms whose lone pair supplies it instead: O/S/Se, and any aromatic
/// atom carrying an explicit hydrogen (pyrrole-type nitrogen).
inline int valence_bond_sum(const Molecule &mol, int atom) {
  const Atom &a = mol.atoms[atom];
  int sum = 0;
  bool any_aromatic = false;
  for (int bi : mol.adjacency[atom]) {
    const Bond &b = mol.bonds[bi];
    if (b.order == BondOrder::Aromatic) {
      sum += 1;
      any_aromatic = true;
    } else {
      sum += static_cast<int>(b.order);
    }
  }
  if (a.aromatic && any_aromatic && a.element != "O" && a.element != "S" &&
      a.element != "Se" && a.explicit_h.value_or(0) == 0)
    sum += 1;
  return sum;
}

/// Fills implicit hydrogens from the default valence table and checks
/// valences. Bracket atoms keep implicit_h = 0 and are checked against
/// the charge-adjusted maximum valence.
inline void assign_implicit_hydrogens(Molecule &mol) {
  for (auto &a : mol.atoms) {
    a.implicit_h = 0;
    if (a.is_wildcard())
      continue;
    int sum = valence_bond_sum(mol, a.index);
    if (a.explicit_h.has_value()) {
      // Bracket atom: H count is explicit, charge widens the allowance.
      const auto &vals = allowed_valences(a.element);
      if (vals.empty())
        continue; // no table entry: accept as written
      int max_allowed = vals.back() + a.formal_charge;
      if (sum + *a.explicit_h > max_allowed)
        throw ValenceError("valence " + std::to_string(sum + *a.explicit_h) +
                           " exceeds allowed " + std::to_string(max_allowed) +
                           " for [" + a.element + "] at atom " +
                           std::to_string(a.index));
      continue;
    }
    const auto &vals = allowed_valences(a.element);
    if (vals.empty())
      throw ValenceError("no default valence for element " + a.element);
    int hydrogens = -1;
    for (int v : vals) {
      if (v >= sum) {
        hydrogens = v - sum;
        break;
      }
    }
    if (hydrogens < 0)
      throw ValenceError("bond-order sum " + std::to_string(sum) +
                         " exceeds all allowed valences of " + a.element +
                         " at atom " + std::to_string(a.index));
    a.implicit_h = hydrogens;
  }
}

} // namespace molparse
