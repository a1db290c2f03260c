//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "molparse/errors.hpp"
#include "molparse/molecule.hpp"

namespace molparse {

struct RingSet {
  std::vector<std::vector<int>> rings; // atom-index cycles
  std::map<int, int> by_size;

  int count(int size) const {
    auto it = by_size.find(size);
    return it == by_size.end() ? 0 : it->second;
  }
};

namespace detail {

/// Edge-set bitmask over bond indices, GF(2) arithmetic.
struct EdgeVec {
  std::vector<std::uint64_t> words;
  explicit EdgeVec(std::size_t bonds) : words((bonds + 63) / 64, 0) {}
  void set(int bond) { words[bond / 64] |= std::uint64_t(1) << (bond % 64); }
  bool test(int bond) const {
    return (words[bond / 64] >> (bond % 64)) & 1;
  }
  void operator^=(const EdgeVec &o) {
    for (std::size_t i = 0; i < words.size(); ++i)
      words[i] ^= o.words[i];
  }
  bool zero() const {
    for (auto w : words)
      if (w)
        return false;
    return true;
  }
  int lowest() const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i])
        return static_cast<int>(i * 64 +
                                static_cast<std::size_t>(__builtin_ctzll(words[i])));
    return -1;
  }
};

struct Cycle {
  std::vector<int> atoms;        // in traversal order
  std::vector<int> sorted_atoms; // tie-break key
  std::vector<int> sorted_bonds;
  EdgeVec edges;
};

/// Total order used for the greedy basis selection: smaller rings first,
/// then lexicographically smallest sorted atom tuple, then bond set.
inline bool cycle_less(const Cycle &x, const Cycle &y) {
  if (x.atoms.size() != y.atoms.size())
    return x.atoms.size() < y.atoms.size();
  if (x.sorted_atoms != y.sorted_atoms)
    return x.sorted_atoms < y.sorted_atoms;
  return x.sorted_bonds < y.sorted_bonds;
}

/// Enumerates every simple cycle of the molecule, restricted to ring
/// bonds (bridges can never be on a cycle).
inline std::vector<Cycle> enumerate_simple_cycles(const Molecule &mol) {
  const int n = mol.atom_count();
  std::vector<Cycle> out;
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::vector<int> path_bonds;

  auto record = [&](int closing_bond) {
    // Deduplicate direction: second atom on the path must be smaller
    // than the last one.
    if (path.size() < 3 || path[1] > path.back())
      return;
    Cycle c{path, path, {}, EdgeVec(mol.bonds.size())};
    std::sort(c.sorted_atoms.begin(), c.sorted_atoms.end());
    c.sorted_bonds = path_bonds;
    c.sorted_bonds.push_back(closing_bond);
    for (int bi : c.sorted_bonds)
      c.edges.set(bi);
    std::sort(c.sorted_bonds.begin(), c.sorted_bonds.end());
    out.push_back(std::move(c));
  };

  std::function<void(int, int)> extend = [&](int v, int start) {
    for (int bi : mol.adjacency[v]) {
      const Bond &b = mol.bonds[bi];
      if (!b.in_ring)
        continue;
      int w = b.other(v);
      if (w == start && path.size() >= 3 &&
          bi != (path_bonds.empty() ? -1 : path_bonds.front()) &&
          (path_bonds.empty() || bi != path_bonds.back())) {
        record(bi);
        continue;
      }
      if (w <= start || on_path[w])
        continue;
      on_path[w] = 1;
      path.push_back(w);
      path_bonds.push_back(bi);
      extend(w, start);
      path_bonds.pop_back();
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 0; s < n; ++s) {
    bool has_ring_bond = false;
    for (int bi : mol.adjacency[s])
      if (mol.bonds[bi].in_ring)
        has_ring_bond = true;
    if (!has_ring_bond)
      continue;
    on_path[s] = 1;
    path.push_back(s);
    extend(s, s);
    path.pop_back();
    on_path[s] = 0;
  }
  return out;
}

/// Greedy selection of an independent cycle set under a fixed total
/// order. Shared by the SSSR implementation and the test oracle so the
/// tie-break is identical; the cycle enumeration routes differ.
inline std::vector<std::vector<int>>
greedy_min_cycle_basis(std::vector<Cycle> cycles, std::size_t bonds,
                       int target) {
  std::stable_sort(cycles.begin(), cycles.end(), cycle_less);
  std::map<int, EdgeVec> basis; // pivot bond -> reduced row
  std::vector<std::vector<int>> chosen;
  for (auto &c : cycles) {
    if (static_cast<int>(chosen.size()) >= target)
      break;
    EdgeVec row = c.edges;
    while (!row.zero()) {
      int p = row.lowest();
      auto it = basis.find(p);
      if (it == basis.end())
        break;
      row ^= it->second;
    }
    if (row.zero())
      continue; // dependent
    basis.emplace(row.lowest(), row);
    chosen.push_back(c.atoms);
  }
  (void)bonds;
  return chosen;
}

} // namespace detail

/// Smallest set of smallest rings: a minimum cycle basis of cardinality
/// bonds - atoms + 1, deterministic under the documented tie-break.
inline RingSet perceive_rings(const Molecule &mol) {
  RingSet rs;
  int target = mol.bond_count() - mol.atom_count() + 1;
  if (target <= 0)
    return rs;
  auto cycles = detail::enumerate_simple_cycles(mol);
  rs.rings = detail::greedy_min_cycle_basis(std::move(cycles),
                                            mol.bonds.size(), target);
  for (const auto &r : rs.rings)
    rs.by_size[static_cast<int>(r.size())]++;
  return rs;
}

/// Number of SSSR rings with exactly k atoms. k must lie in [3,12].
inline int count_rings_of_size(const Molecule &mol, int k) {
  if (k < 3 || k > 12)
    throw RangeError("ring size " + std::to_string(k) +
                     " outside supported range [3,12]");
  return perceive_rings(mol).count(k);
}

/// True when the atom lies on any ring.
inline bool atom_in_ring(const Molecule &mol, int atom) {
  for (int bi : mol.adjacency[atom])
    if (mol.bonds[bi].in_ring)
      return true;
  return false;
}

} // namespace molparse
