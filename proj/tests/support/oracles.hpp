//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations used only by tests. Each oracle
// takes a different algorithmic route from the library code it checks.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "molparse/molecule.hpp"
#include "molparse/pattern.hpp"
#include "molparse/rings.hpp"

namespace molparse::oracle {

/// Minimum cycle basis by exhaustive enumeration: XOR every nonzero
/// subset of the fundamental cycles of a spanning tree, keep the subsets
/// that form one simple cycle, then run the same greedy tie-break order
/// as the implementation. Enumeration route is entirely different from
/// the library's path-DFS cycle search.
inline std::map<int, int> ring_size_histogram(const Molecule &mol) {
  const int n = mol.atom_count();
  const int bcount = mol.bond_count();
  std::map<int, int> hist;
  int mu = bcount - n + 1;
  if (mu <= 0)
    return hist;

  // Spanning tree via BFS; non-tree bonds give fundamental cycles.
  std::vector<int> parent_bond(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<char> tree_bond(bcount, 0);
  std::vector<int> queue{0};
  visited[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int bi : mol.adjacency[v]) {
      int w = mol.bonds[bi].other(v);
      if (!visited[w]) {
        visited[w] = 1;
        parent_bond[w] = bi;
        tree_bond[bi] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::set<int>> fundamental;
  for (int bi = 0; bi < bcount; ++bi) {
    if (tree_bond[bi])
      continue;
    std::set<int> edges{bi};
    // path to root from both endpoints; shared part cancels via XOR
    for (int v : {mol.bonds[bi].a, mol.bonds[bi].b}) {
      for (int x = v; parent_bond[x] != -1;) {
        int pb = parent_bond[x];
        if (edges.count(pb))
          edges.erase(pb);
        else
          edges.insert(pb);
        x = mol.bonds[pb].other(x);
      }
    }
    fundamental.push_back(std::move(edges));
  }

  std::vector<detail::Cycle> cycles;
  const std::uint64_t subsets = std::uint64_t(1) << fundamental.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::set<int> edges;
    for (std::size_t i = 0; i < fundamental.size(); ++i) {
      if (!(mask >> i & 1))
        continue;
      for (int e : fundamental[i]) {
        if (edges.count(e))
          edges.erase(e);
        else
          edges.insert(e);
      }
    }
    if (edges.empty())
      continue;
    // simple cycle: every touched vertex has degree exactly 2 and the
    // edge set is connected
    std::map<int, int> degree;
    for (int e : edges) {
      degree[mol.bonds[e].a]++;
      degree[mol.bonds[e].b]++;
    }
    bool simple = true;
    for (const auto &[v, d] : degree)
      if (d != 2)
        simple = false;
    if (!simple || degree.size() != edges.size())
      continue;
    // connectivity + atom order along the cycle
    std::vector<int> atoms;
    int start = degree.begin()->first;
    int prev = -1, cur = start;
    do {
      atoms.push_back(cur);
      int next = -1;
      for (int e : edges) {
        const Bond &b = mol.bonds[e];
        if (b.a != cur && b.b != cur)
          continue;
        int other = b.other(cur);
        if (other != prev) {
          next = other;
          break;
        }
      }
      prev = cur;
      cur = next;
    } while (cur != start && atoms.size() <= edges.size());
    if (atoms.size() != edges.size())
      continue; // disconnected union of cycles
    detail::Cycle c{atoms, atoms, {}, detail::EdgeVec(mol.bonds.size())};
    std::sort(c.sorted_atoms.begin(), c.sorted_atoms.end());
    c.sorted_bonds.assign(edges.begin(), edges.end());
    for (int e : edges)
      c.edges.set(e);
    cycles.push_back(std::move(c));
  }
  auto basis = detail::greedy_min_cycle_basis(std::move(cycles),
                                              mol.bonds.size(), mu);
  for (const auto &r : basis)
    hist[static_cast<int>(r.size())]++;
  return hist;
}

/// Longest simple path over non-ring carbons by exhaustive DFS from
/// every start atom (no forest assumption).
inline int longest_chain_exhaustive(const Molecule &mol) {
  const int n = mol.atom_count();
  std::vector<char> eligible(n, 0);
  for (int i = 0; i < n; ++i)
    eligible[i] = mol.atoms[i].element == "C" && !atom_in_ring(mol, i);
  int best = 0;
  std::vector<char> on_path(n, 0);
  std::function<void(int, int)> extend = [&](int v, int depth) {
    best = std::max(best, depth);
    for (int w : mol.neighbors(v)) {
      if (!eligible[w] || on_path[w])
        continue;
      on_path[w] = 1;
      extend(w, depth + 1);
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    if (!eligible[s])
      continue;
    on_path[s] = 1;
    extend(s, 1);
    on_path[s] = 0;
  }
  return best;
}

/// Plain exhaustive injective-mapping enumeration in pattern-index
/// order, no candidate ordering or rarest-first heuristics.
inline bool match_exhaustive(const Molecule &mol,
                             const FunctionalGroupPattern &pattern) {
  const int pn = static_cast<int>(pattern.atoms.size());
  if (pn == 0)
    return false;
  std::vector<int> map(pn, -1);
  std::vector<char> used(mol.atom_count(), 0);
  std::function<bool(int)> place = [&](int p) {
    if (p == pn) {
      for (const auto &b : pattern.bonds) {
        const Bond *mb = mol.find_bond(map[b.i], map[b.j]);
        if (!mb || mb->order != b.order)
          return false;
      }
      return true;
    }
    for (int m = 0; m < mol.atom_count(); ++m) {
      if (used[m] || !detail::atom_matches(pattern.atoms[p], mol, m))
        continue;
      map[p] = m;
      used[m] = 1;
      if (place(p + 1))
        return true;
      used[m] = 0;
      map[p] = -1;
    }
    return false;
  };
  return place(0);
}

} // namespace molparse::oracle
