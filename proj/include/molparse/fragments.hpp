//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "molparse/canonical.hpp"
#include "molparse/errors.hpp"
#include "molparse/molecule.hpp"
#include "molparse/parse.hpp"

namespace molparse {

struct FragmentPair {
  Molecule frag_a; // contains the original bond's first endpoint
  Molecule frag_b;
  std::string frag_a_smiles; // canonical, wildcard included
  std::string frag_b_smiles;
  std::string parent_canonical;
  std::pair<int, int> cut_bond; // original atom indices
};

/// All single, non-ring bonds between heavy atoms whose removal leaves
/// two components of at least 2 heavy atoms each. Ordered by
/// (min endpoint, max endpoint).
inline std::vector<std::pair<int, int>> enumerate_cut_bonds(const Molecule &mol) {
  std::vector<std::pair<int, int>> out;
  for (const auto &bond : mol.bonds) {
    if (bond.order != BondOrder::Single || bond.in_ring)
      continue;
    if (mol.atoms[bond.a].is_wildcard() || mol.atoms[bond.b].is_wildcard())
      continue;
    // Removing a non-ring bond always splits the graph; size each side.
    std::vector<char> seen(mol.atom_count(), 0);
    std::vector<int> stack{bond.a};
    seen[bond.a] = 1;
    int side_a = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (!mol.atoms[v].is_wildcard())
        ++side_a;
      for (int w : mol.neighbors(v)) {
        if ((v == bond.a && w == bond.b) || (v == bond.b && w == bond.a))
          continue;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    int side_b = mol.heavy_atom_count() - side_a;
    if (side_a >= 2 && side_b >= 2)
      out.emplace_back(std::min(bond.a, bond.b), std::max(bond.a, bond.b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Extracts the component containing `keep` after conceptually removing
/// the a-b bond, appending a degree-1 wildcard where the bond was cut.
inline Molecule extract_fragment(const Molecule &mol, int keep, int cut_a,
                                 int cut_b) {
  std::vector<char> in_side(mol.atom_count(), 0);
  std::vector<int> stack{keep};
  in_side[keep] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : mol.neighbors(v)) {
      if ((v == cut_a && w == cut_b) || (v == cut_b && w == cut_a))
        continue;
      if (!in_side[w]) {
        in_side[w] = 1;
        stack.push_back(w);
      }
    }
  }
  Molecule frag;
  std::vector<int> remap(mol.atom_count(), -1);
  for (const auto &a : mol.atoms)
    if (in_side[a.index])
      remap[a.index] = frag.add_atom(a);
  for (const auto &b : mol.bonds) {
    if (!in_side[b.a] || !in_side[b.b])
      continue;
    if ((b.a == cut_a && b.b == cut_b) || (b.a == cut_b && b.b == cut_a))
      continue;
    frag.add_bond(remap[b.a], remap[b.b], b.order);
  }
  Atom wildcard;
  wildcard.element = std::string(kWildcard);
  wildcard.explicit_h = 0;
  int widx = frag.add_atom(wildcard);
  frag.add_bond(remap[keep], widx, BondOrder::Single);
  flag_ring_bonds(frag);
  assign_implicit_hydrogens(frag);
  return frag;
}

inline int find_single_wildcard(const Molecule &frag) {
  int found = -1;
  for (const auto &a : frag.atoms) {
    if (!a.is_wildcard())
      continue;
    if (found != -1)
      throw AssemblyError("fragment has more than one wildcard atom");
    found = a.index;
  }
  if (found == -1)
    throw AssemblyError("fragment has no wildcard atom");
  if (frag.degree(found) != 1)
    throw AssemblyError("wildcard atom must have degree 1");
  return found;
}

} // namespace detail

/// Severs a qualifying acyclic single bond into two wildcard-marked
/// fragments. frag_a holds the bond's lower-indexed endpoint.
inline FragmentPair cut(const Molecule &mol, std::pair<int, int> bond) {
  auto cuts = enumerate_cut_bonds(mol);
  if (std::find(cuts.begin(), cuts.end(), bond) == cuts.end())
    throw CutError("bond " + std::to_string(bond.first) + "-" +
                   std::to_string(bond.second) + " is not a qualifying cut");
  FragmentPair pair;
  pair.cut_bond = bond;
  pair.parent_canonical = canonicalize(mol);
  pair.frag_a = detail::extract_fragment(mol, bond.first, bond.first, bond.second);
  pair.frag_b = detail::extract_fragment(mol, bond.second, bond.first, bond.second);
  pair.frag_a_smiles = canonicalize(pair.frag_a);
  pair.frag_b_smiles = canonicalize(pair.frag_b);
  return pair;
}

/// Joins two single-wildcard fragments with one new single bond between
/// the wildcards' neighbors. The result is re-validated.
inline Molecule assemble(const Molecule &frag_a, const Molecule &frag_b) {
  int wa = detail::find_single_wildcard(frag_a);
  int wb = detail::find_single_wildcard(frag_b);
  int na = frag_a.neighbors(wa)[0];
  int nb = frag_b.neighbors(wb)[0];

  Molecule mol;
  std::vector<int> remap_a(frag_a.atom_count(), -1);
  std::vector<int> remap_b(frag_b.atom_count(), -1);
  for (const auto &a : frag_a.atoms)
    if (a.index != wa)
      remap_a[a.index] = mol.add_atom(a);
  for (const auto &a : frag_b.atoms)
    if (a.index != wb)
      remap_b[a.index] = mol.add_atom(a);
  for (const auto &b : frag_a.bonds)
    if (b.a != wa && b.b != wa)
      mol.add_bond(remap_a[b.a], remap_a[b.b], b.order);
  for (const auto &b : frag_b.bonds)
    if (b.a != wb && b.b != wb)
      mol.add_bond(remap_b[b.a], remap_b[b.b], b.order);
  mol.add_bond(remap_a[na], remap_b[nb], BondOrder::Single);
  flag_ring_bonds(mol);
  try {
    assign_implicit_hydrogens(mol);
  } catch (const ValenceError &e) {
    throw AssemblyError(std::string("assembled molecule fails valence: ") +
                        e.what());
  }
  return mol;
}

/// Canonical-equality check of a candidate answer against the pair's
/// parent. Unparseable candidates yield false and set *invalid.
inline bool verify_assembly(const FragmentPair &pair,
                            const std::string &candidate,
                            bool *invalid = nullptr) {
  if (invalid)
    *invalid = false;
  try {
    Molecule m = parse(candidate);
    return canonicalize(m) == pair.parent_canonical;
  } catch (const Error &) {
    if (invalid)
      *invalid = true;
    return false;
  }
}

} // namespace molparse
