//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "molparse/molecule.hpp"
#include "molparse/rng.hpp"
#include "molparse/write.hpp"

namespace molparse {

struct AtomRanking {
  std::vector<int> rank; // permutation of 1..A
  int refinement_rounds = 0;
};

namespace detail {

/// Seed invariant per atom: element, aromaticity, degree, charge,
/// hydrogen count, bond-order multiset, and the sorted multiset of BFS
/// distances to every other atom. All entries are isomorphism-invariant.
inline std::vector<std::vector<int>> initial_invariants(const Molecule &mol) {
  const int n = mol.atom_count();
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> k;
    for (char c : mol.atoms[v].element)
      k.push_back(c);
    k.push_back(-1);
    k.push_back(mol.atoms[v].aromatic ? 1 : 0);
    k.push_back(mol.degree(v));
    k.push_back(mol.atoms[v].formal_charge);
    k.push_back(mol.atoms[v].total_h());
    k.push_back(mol.atoms[v].isotope.value_or(0));
    std::vector<int> orders;
    for (int bi : mol.adjacency[v])
      orders.push_back(static_cast<int>(mol.bonds[bi].order));
    std::sort(orders.begin(), orders.end());
    k.push_back(-2);
    k.insert(k.end(), orders.begin(), orders.end());
    // BFS distance profile
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    std::vector<int> queue{v};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int w : mol.neighbors(x))
        if (dist[w] == -1) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
    }
    std::sort(dist.begin(), dist.end());
    k.push_back(-3);
    k.insert(k.end(), dist.begin(), dist.end());
    keys[v] = std::move(k);
  }
  return keys;
}

template <typename Key>
inline std::vector<int> ranks_from_keys(const std::vector<Key> &keys) {
  std::vector<int> idx(keys.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(keys.size());
  int r = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || keys[idx[i]] != keys[idx[i - 1]])
      ++r;
    rank[idx[i]] = r;
  }
  return rank;
}

inline int distinct_count(const std::vector<int> &rank) {
  return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
}

/// One neighborhood refinement sweep to a fixed point.
inline void refine(const Molecule &mol, std::vector<int> &rank, int &rounds) {
  const int n = mol.atom_count();
  for (;;) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> k{rank[v]};
      std::vector<int> nbr;
      for (int w : mol.neighbors(v))
        nbr.push_back(rank[w]);
      std::sort(nbr.begin(), nbr.end());
      k.insert(k.end(), nbr.begin(), nbr.end());
      keys[v] = std::move(k);
    }
    std::vector<int> next = ranks_from_keys(keys);
    ++rounds;
    if (next == rank)
      return;
    bool grew = distinct_count(next) > distinct_count(rank);
    rank = std::move(next);
    if (!grew)
      return;
  }
}

} // namespace detail

/// Canonical atom ranking: iterative invariant refinement with the
/// classic rank-doubling tie-break (among tied atoms the one with the
/// smallest input index is lowered).
inline AtomRanking canonical_ranks(const Molecule &mol) {
  const int n = mol.atom_count();
  AtomRanking out;
  if (n == 0)
    return out;
  out.rank = detail::ranks_from_keys(detail::initial_invariants(mol));
  detail::refine(mol, out.rank, out.refinement_rounds);
  while (detail::distinct_count(out.rank) < n) {
    // Smallest tied rank class, smallest input index within it.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v)
      classes[out.rank[v]].push_back(v);
    int chosen = -1;
    for (const auto &[r, members] : classes)
      if (members.size() > 1) {
        chosen = members.front();
        break;
      }
    for (int v = 0; v < n; ++v)
      out.rank[v] *= 2;
    out.rank[chosen] -= 1;
    detail::refine(mol, out.rank, out.refinement_rounds);
  }
  // Normalize to a permutation of 1..n.
  out.rank = detail::ranks_from_keys(out.rank);
  return out;
}

/// Canonical SMILES: DFS from the rank-1 atom, neighbors in ascending
/// rank. Identical for every rendering of the same molecular graph.
inline std::string canonicalize(const Molecule &mol) {
  AtomRanking ranking = canonical_ranks(mol);
  return detail::write_priority(mol, ranking.rank);
}

/// Seeded random rendering: uniform random traversal priority. Resamples
/// up to 10 times when the output collides with the canonical string,
/// then accepts whatever the last draw produced.
inline std::string randomized_smiles(const Molecule &mol, std::uint64_t seed) {
  const int n = mol.atom_count();
  SplitMix64 rng(seed);
  std::string canonical = canonicalize(mol);
  std::string rendering;
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<int> priority(n);
    for (int i = 0; i < n; ++i)
      priority[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(priority[i], priority[rng.below(i + 1)]);
    rendering = detail::write_priority(mol, priority);
    if (rendering != canonical)
      return rendering;
  }
  return rendering;
}

} // namespace molparse
