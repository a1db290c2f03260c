//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "molparse/chains.hpp"
#include "molparse/errors.hpp"
#include "molparse/parse.hpp"
#include "molparse/rings.hpp"
#include "molparse/tasks.hpp"

namespace molparse {

struct DifficultyScore {
  double value = 0.0;
  std::map<std::string, double> components;
};

/// Task-adaptive difficulty, recomputable from (source_smiles, meta):
///   functional_group   heavy-atom count
///   ring_count         ring count + fused (atom-sharing) ring pairs
///   chain_length       max atom-token gap between consecutive chain atoms
///   canonicalization   heavy-atom count + max branch nesting depth
///   fragment_assembly  total heavy atoms over both fragments
inline DifficultyScore difficulty(const TaskRecord &record) {
  DifficultyScore score;
  switch (record.task) {
  case TaskKind::FunctionalGroup: {
    Molecule mol = parse(record.source_smiles);
    score.components["heavy_atoms"] = mol.heavy_atom_count();
    score.value = mol.heavy_atom_count();
    break;
  }
  case TaskKind::RingCount: {
    Molecule mol = parse(record.source_smiles);
    RingSet rs = perceive_rings(mol);
    int fused = 0;
    for (std::size_t i = 0; i < rs.rings.size(); ++i)
      for (std::size_t j = i + 1; j < rs.rings.size(); ++j) {
        bool share = false;
        for (int a : rs.rings[i])
          if (std::find(rs.rings[j].begin(), rs.rings[j].end(), a) !=
              rs.rings[j].end())
            share = true;
        if (share)
          ++fused;
      }
    score.components["rings"] = static_cast<double>(rs.rings.size());
    score.components["fused_pairs"] = fused;
    score.value = static_cast<double>(rs.rings.size()) + fused;
    break;
  }
  case TaskKind::ChainLength: {
    // Atom index equals atom-token ordinal in the source string, so the
    // gap between consecutive chain atoms is their index distance.
    Molecule mol = parse(record.source_smiles);
    ChainResult chain = longest_carbon_chain(mol);
    int max_gap = 0;
    for (std::size_t i = 1; i < chain.path.size(); ++i)
      max_gap = std::max(max_gap, std::abs(chain.path[i] - chain.path[i - 1]));
    score.components["max_token_gap"] = max_gap;
    score.value = max_gap;
    break;
  }
  case TaskKind::Canonicalization: {
    Molecule mol = parse(record.source_smiles);
    int depth = 0, max_depth = 0;
    for (char c : record.source_smiles) {
      if (c == '(')
        max_depth = std::max(max_depth, ++depth);
      else if (c == ')')
        --depth;
    }
    score.components["heavy_atoms"] = mol.heavy_atom_count();
    score.components["max_branch_depth"] = max_depth;
    score.value = mol.heavy_atom_count() + max_depth;
    break;
  }
  case TaskKind::FragmentAssembly: {
    auto frags = parse_fragments(record.source_smiles);
    int heavy = 0;
    for (const auto &f : frags)
      heavy += f.heavy_atom_count();
    score.components["total_heavy_atoms"] = heavy;
    score.value = heavy;
    break;
  }
  }
  return score;
}

/// Computes and stores the difficulty on a record (value plus the
/// component breakdown in meta).
inline void apply_difficulty(TaskRecord &record) {
  DifficultyScore s = difficulty(record);
  record.difficulty = s.value;
  nlohmann::ordered_json comps = nlohmann::ordered_json::object();
  for (const auto &[k, v] : s.components)
    comps[k] = v;
  record.meta["difficulty_components"] = comps;
}

struct PruneBand {
  double low = 0.0;
  double high = 1.0;

  static PruneBand parse(const std::string &text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw ConfigError("band must be LOW:HIGH, got '" + text + "'");
    PruneBand band;
    try {
      band.low = std::stod(text.substr(0, colon));
      band.high = std::stod(text.substr(colon + 1));
    } catch (const std::exception &) {
      throw ConfigError("band must be LOW:HIGH, got '" + text + "'");
    }
    band.validate();
    return band;
  }

  void validate() const {
    if (!(low >= 0.0 && low < high && high <= 1.0))
      throw ConfigError("band requires 0 <= low < high <= 1");
  }
};

namespace detail {

/// Nearest-rank percentile: value at index ceil(p*N) (1-based) of the
/// ascending-sorted scores.
inline double nearest_rank(const std::vector<double> &sorted, double p) {
  std::size_t n = sorted.size();
  std::size_t rank = static_cast<std::size_t>(std::ceil(p * n));
  if (rank == 0)
    rank = 1;
  if (rank > n)
    rank = n;
  return sorted[rank - 1];
}

} // namespace detail

/// Keeps records whose difficulty lies in (P(low), P(high)] computed per
/// task with the nearest-rank method (low = 0 keeps the bottom end).
/// Survivor order is the input order.
inline std::vector<TaskRecord> prune(const std::vector<TaskRecord> &records,
                                     const PruneBand &band) {
  band.validate();
  std::map<TaskKind, std::vector<double>> per_task;
  for (const auto &r : records)
    per_task[r.task].push_back(r.difficulty);
  std::map<TaskKind, std::pair<double, double>> bounds;
  for (auto &[task, scores] : per_task) {
    std::sort(scores.begin(), scores.end());
    bounds[task] = {detail::nearest_rank(scores, band.low),
                    detail::nearest_rank(scores, band.high)};
  }
  std::vector<TaskRecord> out;
  std::map<TaskKind, int> kept;
  for (const auto &r : records) {
    auto [lo, hi] = bounds[r.task];
    bool keep = (band.low == 0.0 || r.difficulty > lo) && r.difficulty <= hi;
    if (keep) {
      out.push_back(r);
      kept[r.task]++;
    }
  }
  for (const auto &[task, scores] : per_task)
    if (kept[task] == 0)
      throw EmptyBandError("band retains zero records for task " +
                           std::string(task_name(task)));
  return out;
}

namespace detail {

inline const std::string &sort_canonical(TaskRecord &r) {
  if (r.sort_canonical.empty()) {
    if (r.task == TaskKind::Canonicalization ||
        r.task == TaskKind::FragmentAssembly)
      r.sort_canonical = r.answer;
    else
      r.sort_canonical = canonicalize(parse(r.source_smiles));
  }
  return r.sort_canonical;
}

} // namespace detail

/// Stable ascending curriculum order: (difficulty, canonical form of the
/// source molecule). A deterministic total order up to identical
/// (difficulty, molecule) pairs, which the stable sort leaves in input
/// order.
inline std::vector<TaskRecord> curriculum_sort(std::vector<TaskRecord> records) {
  for (auto &r : records)
    detail::sort_canonical(r);
  std::stable_sort(records.begin(), records.end(),
                   [](const TaskRecord &a, const TaskRecord &b) {
                     if (a.difficulty != b.difficulty)
                       return a.difficulty < b.difficulty;
                     return a.sort_canonical < b.sort_canonical;
                   });
  return records;
}

} // namespace molparse
