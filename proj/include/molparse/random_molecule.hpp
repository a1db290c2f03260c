//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

#include "molparse/molecule.hpp"
#include "molparse/parse.hpp"
#include "molparse/rng.hpp"
#include "molparse/write.hpp"

namespace molparse {

struct RandomMoleculeParams {
  int min_heavy_atoms = 4;
  int max_heavy_atoms = 24;
  int max_extra_rings = 2;        // aliphatic ring closures
  double aromatic_ring_prob = 0.35;
  double hetero_ring_prob = 0.3;  // one pyridine-type N in an aromatic ring
  double double_bond_prob = 0.12;
  double triple_bond_prob = 0.03;
  double ring_close_prob = 0.5;   // per extra-ring attempt
};

/// Seeded generator of valid drug-like molecular graphs, used to build
/// synthetic corpora. Valences are respected by construction, so every
/// output re-parses.
class RandomMoleculeGenerator {
public:
  explicit RandomMoleculeGenerator(std::uint64_t seed,
                                   RandomMoleculeParams params = {})
      : rng_(seed), params_(params) {}

  Molecule next_molecule() {
    for (;;) {
      Molecule mol = try_build();
      if (mol.atom_count() > 0)
        return mol;
    }
  }

  /// Random rendering of a random molecule.
  std::string next_smiles() {
    Molecule mol = next_molecule();
    const int n = mol.atom_count();
    std::vector<int> priority(n);
    for (int i = 0; i < n; ++i)
      priority[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(priority[i], priority[rng_.below(i + 1)]);
    return detail::write_priority(mol, priority);
  }

private:
  bool chance(double p) { return rng_.below(1000000) < p * 1000000; }

  std::string pick_element() {
    std::uint64_t r = rng_.below(100);
    if (r < 70)
      return "C";
    if (r < 82)
      return "N";
    if (r < 92)
      return "O";
    if (r < 95)
      return "S";
    if (r < 97)
      return "F";
    if (r < 99)
      return "Cl";
    return "Br";
  }

  /// Adds a six-membered aromatic ring; returns the attachable atom
  /// index (an aromatic carbon with one free slot) or -1.
  int add_aromatic_ring(Molecule &mol, std::vector<int> &free) {
    int base = mol.atom_count();
    int nitro_pos = chance(params_.hetero_ring_prob)
                        ? static_cast<int>(rng_.below(6))
                        : -1;
    if (nitro_pos == 0)
      nitro_pos = 1; // keep atom 0 an attachable carbon
    for (int i = 0; i < 6; ++i) {
      Atom a;
      a.element = i == nitro_pos ? "N" : "C";
      a.aromatic = true;
      mol.add_atom(a);
      // aromatic C: 2 ring bonds + delocalization uses 3 of 4 slots
      free.push_back(i == nitro_pos ? 0 : 1);
    }
    for (int i = 0; i < 6; ++i)
      mol.add_bond(base + i, base + (i + 1) % 6, BondOrder::Aromatic);
    return base;
  }

  Molecule try_build() {
    Molecule mol;
    std::vector<int> free; // remaining valence slots per atom
    const int target =
        params_.min_heavy_atoms +
        static_cast<int>(rng_.below(params_.max_heavy_atoms -
                                    params_.min_heavy_atoms + 1));

    if (chance(params_.aromatic_ring_prob)) {
      add_aromatic_ring(mol, free);
    } else {
      Atom a;
      a.element = "C";
      mol.add_atom(a);
      free.push_back(4);
    }

    int guard = 0;
    while (mol.atom_count() < target && ++guard < 500) {
      // occasionally fuse in another aromatic ring
      if (chance(params_.aromatic_ring_prob * 0.3) &&
          mol.atom_count() + 6 <= params_.max_heavy_atoms) {
        std::vector<int> anchors;
        for (int i = 0; i < mol.atom_count(); ++i)
          if (free[i] >= 1)
            anchors.push_back(i);
        if (!anchors.empty()) {
          int anchor = anchors[rng_.below(anchors.size())];
          int ring0 = add_aromatic_ring(mol, free);
          mol.add_bond(anchor, ring0, BondOrder::Single);
          free[anchor] -= 1;
          free[ring0] -= 1;
          continue;
        }
      }
      std::vector<int> anchors;
      for (int i = 0; i < mol.atom_count(); ++i)
        if (free[i] >= 1)
          anchors.push_back(i);
      if (anchors.empty())
        break;
      int anchor = anchors[rng_.below(anchors.size())];
      std::string elem = pick_element();
      int cap = allowed_valences(elem).back();
      int order = 1;
      if (free[anchor] >= 2 && cap >= 2 && !mol.atoms[anchor].aromatic) {
        if (chance(params_.triple_bond_prob) && free[anchor] >= 3 && cap >= 3)
          order = 3;
        else if (chance(params_.double_bond_prob))
          order = 2;
      }
      Atom a;
      a.element = elem;
      int idx = mol.add_atom(a);
      free.push_back(cap - order);
      mol.add_bond(anchor, idx, static_cast<BondOrder>(order));
      free[anchor] -= order;
    }

    // extra aliphatic ring closures
    for (int attempt = 0; attempt < params_.max_extra_rings; ++attempt) {
      if (!chance(params_.ring_close_prob))
        continue;
      std::vector<std::pair<int, int>> options;
      for (int a = 0; a < mol.atom_count(); ++a) {
        if (free[a] < 1 || mol.atoms[a].aromatic)
          continue;
        // BFS distances from a
        std::vector<int> dist(mol.atom_count(), -1);
        dist[a] = 0;
        std::vector<int> queue{a};
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
          for (int w : mol.neighbors(queue[qi]))
            if (dist[w] == -1) {
              dist[w] = dist[queue[qi]] + 1;
              queue.push_back(w);
            }
        for (int b = a + 1; b < mol.atom_count(); ++b)
          if (free[b] >= 1 && !mol.atoms[b].aromatic && dist[b] >= 2 &&
              dist[b] <= 5 && !mol.find_bond(a, b))
            options.emplace_back(a, b);
      }
      if (options.empty())
        continue;
      auto [a, b] = options[rng_.below(options.size())];
      mol.add_bond(a, b, BondOrder::Single);
      free[a] -= 1;
      free[b] -= 1;
    }

    flag_ring_bonds(mol);
    assign_implicit_hydrogens(mol);
    return mol;
  }

  SplitMix64 rng_;
  RandomMoleculeParams params_;
};

} // namespace molparse
