//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "molparse/elements.hpp"
#include "molparse/errors.hpp"
#include "molparse/molecule.hpp"

namespace molparse {

namespace detail {

inline std::string bond_prefix(const Molecule &mol, const Bond &b) {
  switch (b.order) {
  case BondOrder::Double:
    return "=";
  case BondOrder::Triple:
    return "#";
  case BondOrder::Aromatic:
    return "";
  case BondOrder::Single:
    // Single bonds between two aromatic atoms need the explicit dash,
    // otherwise the reader would default to aromatic.
    if (mol.atoms[b.a].aromatic && mol.atoms[b.b].aromatic)
      return "-";
    return "";
  }
  return "";
}

inline std::string atom_text(const Atom &a) {
  auto lower = [](std::string s) {
    for (auto &c : s)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  bool bare = !a.is_wildcard() && !a.explicit_h.has_value() &&
              a.formal_charge == 0 && !a.isotope.has_value() &&
              is_organic_subset(a.element);
  if (bare)
    return a.aromatic ? lower(a.element) : a.element;
  std::string out = "[";
  if (a.isotope)
    out += std::to_string(*a.isotope);
  if (a.is_wildcard())
    out += "*";
  else
    out += a.aromatic ? lower(a.element) : a.element;
  int h = a.explicit_h.value_or(0);
  if (h == 1)
    out += "H";
  else if (h > 1)
    out += "H" + std::to_string(h);
  if (a.formal_charge == 1)
    out += "+";
  else if (a.formal_charge == -1)
    out += "-";
  else if (a.formal_charge > 1)
    out += "+" + std::to_string(a.formal_charge);
  else if (a.formal_charge < -1)
    out += "-" + std::to_string(-a.formal_charge);
  out += "]";
  return out;
}

/// DFS-emits a connected molecule; lower priority is visited first.
/// Ring-closure labels are assigned smallest-available-first.
inline std::string write_priority(const Molecule &mol,
                                  const std::vector<int> &priority) {
  const int n = mol.atom_count();
  if (n == 0)
    throw Error("cannot write an empty molecule");

  // Pass 1: DFS order, tree children, closure bonds.
  std::vector<int> visit_pos(n, -1);
  std::vector<std::vector<int>> children(n);      // child atom order
  std::vector<std::vector<int>> closure_bonds(n); // bond indices per atom
  std::vector<char> bond_is_tree(mol.bonds.size(), 0);
  std::vector<char> bond_seen(mol.bonds.size(), 0);
  int root = 0;
  for (int i = 1; i < n; ++i)
    if (priority[i] < priority[root])
      root = i;

  int clock = 0;
  struct Frame {
    int v;
    std::vector<int> nbr_bonds;
    std::size_t next;
  };
  std::vector<Frame> stack;
  auto open_vertex = [&](int v) {
    visit_pos[v] = clock++;
    std::vector<int> nb(mol.adjacency[v]);
    std::sort(nb.begin(), nb.end(), [&](int x, int y) {
      return priority[mol.bonds[x].other(v)] < priority[mol.bonds[y].other(v)];
    });
    stack.push_back(Frame{v, std::move(nb), 0});
  };
  open_vertex(root);
  while (!stack.empty()) {
    Frame &f = stack.back();
    if (f.next >= f.nbr_bonds.size()) {
      stack.pop_back();
      continue;
    }
    int bi = f.nbr_bonds[f.next++];
    if (bond_seen[bi])
      continue;
    int w = mol.bonds[bi].other(f.v);
    bond_seen[bi] = 1;
    if (visit_pos[w] == -1) {
      bond_is_tree[bi] = 1;
      children[f.v].push_back(w);
      open_vertex(w);
    } else {
      closure_bonds[f.v].push_back(bi);
      closure_bonds[w].push_back(bi);
    }
  }
  for (int i = 0; i < n; ++i)
    if (visit_pos[i] == -1)
      throw Error("molecule is not connected; cannot write a single SMILES");

  // Closures at each atom ordered by the partner's visit position.
  for (int v = 0; v < n; ++v)
    std::sort(closure_bonds[v].begin(), closure_bonds[v].end(),
              [&](int x, int y) {
                int px = visit_pos[mol.bonds[x].other(v)];
                int py = visit_pos[mol.bonds[y].other(v)];
                return px < py;
              });

  // Pass 2: emit.
  std::map<int, int> open_digit; // bond index -> digit
  std::vector<char> digit_used(100, 0);
  auto alloc_digit = [&]() {
    for (int d = 1; d < 100; ++d)
      if (!digit_used[d]) {
        digit_used[d] = 1;
        return d;
      }
    throw Error("more than 99 concurrently open ring closures");
  };
  auto digit_text = [](int d) {
    return d < 10 ? std::to_string(d) : "%" + std::to_string(d);
  };

  std::string out;
  struct EmitFrame {
    int v;
    std::size_t next_child;
    bool entered;
  };
  std::vector<EmitFrame> estack{{root, 0, false}};
  // Parenthesis bookkeeping: a child that is not the last of its parent
  // is wrapped in parens.
  std::vector<char> close_paren_after; // aligned with estack depth
  close_paren_after.push_back(0);
  while (!estack.empty()) {
    EmitFrame &f = estack.back();
    if (!f.entered) {
      f.entered = true;
      out += atom_text(mol.atoms[f.v]);
      for (int bi : closure_bonds[f.v]) {
        auto it = open_digit.find(bi);
        if (it == open_digit.end()) {
          int d = alloc_digit();
          open_digit[bi] = d;
          out += bond_prefix(mol, mol.bonds[bi]);
          out += digit_text(d);
        } else {
          out += digit_text(it->second);
          digit_used[it->second] = 0;
          open_digit.erase(it);
        }
      }
    }
    if (f.next_child < children[f.v].size()) {
      int w = children[f.v][f.next_child++];
      bool last = f.next_child == children[f.v].size();
      if (!last)
        out += "(";
      const Bond *b = mol.find_bond(f.v, w);
      out += bond_prefix(mol, *b);
      estack.push_back({w, 0, false});
      close_paren_after.push_back(!last);
    } else {
      bool close = close_paren_after.back();
      close_paren_after.pop_back();
      estack.pop_back();
      if (close)
        out += ")";
    }
  }
  return out;
}

} // namespace detail

/// Renders a molecule following the given atom visit order (a DFS order
/// of the graph). Ring-closure labels are assigned smallest-available-
/// first; the output re-parses to an isomorphic graph.
inline std::string write(const Molecule &mol, const std::vector<int> &order) {
  const int n = mol.atom_count();
  if (static_cast<int>(order.size()) != n)
    throw Error("atom order must be a permutation of all atom indices");
  std::vector<int> priority(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || priority[order[i]] != -1)
      throw Error("atom order must be a permutation of all atom indices");
    priority[order[i]] = i;
  }
  return detail::write_priority(mol, priority);
}

} // namespace molparse
