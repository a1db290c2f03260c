//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <vector>

#include "molparse/molecule.hpp"
#include "molparse/rings.hpp"

namespace molparse {

struct ChainResult {
  int length = 0;        // atom count; 0 when no acyclic carbon exists
  std::vector<int> path; // atom indices, empty when length == 0
};

/// Longest simple path in the subgraph induced by non-ring carbon
/// atoms. That subgraph is always a forest (a carbon cycle would make
/// its atoms ring atoms), so the unique-path-per-pair search is exact.
/// Ties resolve to the lexicographically smallest index sequence,
/// comparing the smaller of the two path directions.
inline ChainResult longest_carbon_chain(const Molecule &mol) {
  const int n = mol.atom_count();
  std::vector<char> eligible(n, 0);
  for (int i = 0; i < n; ++i)
    eligible[i] = mol.atoms[i].element == "C" && !atom_in_ring(mol, i);

  auto canonical_direction = [](std::vector<int> p) {
    std::vector<int> rev(p.rbegin(), p.rend());
    return std::min(p, rev);
  };

  ChainResult best;
  std::vector<int> parent(n);
  for (int u = 0; u < n; ++u) {
    if (!eligible[u])
      continue;
    if (best.length < 1) {
      best.length = 1;
      best.path = {u};
    }
    // BFS through the eligible forest from u; record parents.
    std::fill(parent.begin(), parent.end(), -2);
    parent[u] = -1;
    std::vector<int> queue{u};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : mol.neighbors(v)) {
        if (!eligible[w] || parent[w] != -2)
          continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    for (int v : queue) {
      if (v == u)
        continue;
      std::vector<int> path;
      for (int x = v; x != -1; x = parent[x])
        path.push_back(x);
      std::reverse(path.begin(), path.end());
      int len = static_cast<int>(path.size());
      if (len < best.length)
        continue;
      auto cand = canonical_direction(std::move(path));
      if (len > best.length || cand < canonical_direction(best.path)) {
        best.length = len;
        best.path = std::move(cand);
      }
    }
  }
  return best;
}

} // namespace molparse
