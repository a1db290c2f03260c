//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "molparse/canonical.hpp"
#include "molparse/chains.hpp"
#include "molparse/errors.hpp"
#include "molparse/fragments.hpp"
#include "molparse/molecule.hpp"
#include "molparse/pattern.hpp"
#include "molparse/rings.hpp"
#include "molparse/rng.hpp"

namespace molparse {

enum class TaskKind : int {
  FunctionalGroup = 0,
  RingCount = 1,
  ChainLength = 2,
  Canonicalization = 3,
  FragmentAssembly = 4,
};

inline constexpr std::array<TaskKind, 5> kAllTasks = {
    TaskKind::FunctionalGroup, TaskKind::RingCount, TaskKind::ChainLength,
    TaskKind::Canonicalization, TaskKind::FragmentAssembly};

inline const char *task_name(TaskKind t) {
  switch (t) {
  case TaskKind::FunctionalGroup:
    return "functional_group";
  case TaskKind::RingCount:
    return "ring_count";
  case TaskKind::ChainLength:
    return "chain_length";
  case TaskKind::Canonicalization:
    return "canonicalization";
  case TaskKind::FragmentAssembly:
    return "fragment_assembly";
  }
  return "?";
}

inline TaskKind task_from_name(const std::string &name) {
  for (TaskKind t : kAllTasks)
    if (name == task_name(t))
      return t;
  throw Error("unknown task name '" + name + "'");
}

struct TaskRecord {
  TaskKind task = TaskKind::FunctionalGroup;
  std::string source_smiles;
  std::string prompt;
  std::string answer;
  double difficulty = 0.0;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  // Canonical form of the underlying molecule; internal sort key, not
  // emitted. Recomputed lazily for records loaded from disk.
  std::string sort_canonical;
};

// ---------------------------------------------------------------------------
// Prompt templates
// ---------------------------------------------------------------------------

struct PromptTemplate {
  TaskKind task;
  std::string text;
};

/// Substitutes {placeholder} occurrences. Any placeholder left without a
/// value raises TemplateError.
inline std::string render_prompt(const std::string &tmpl,
                                 const std::map<std::string, std::string> &values) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    std::size_t close = tmpl.find('}', i);
    if (close == std::string::npos)
      throw TemplateError("unterminated '{' in template");
    std::string key = tmpl.substr(i + 1, close - i - 1);
    auto it = values.find(key);
    if (it == values.end())
      throw TemplateError("unresolved placeholder {" + key + "}");
    out += it->second;
    i = close + 1;
  }
  return out;
}

class TaskTemplates {
public:
  const std::string &text(TaskKind t) const { return texts_.at(t); }

  static TaskTemplates defaults() {
    TaskTemplates tt;
    tt.texts_[TaskKind::FunctionalGroup] =
        "Determine whether the molecule with SMILES {smiles} contains the "
        "functional group {group}. Answer yes or no.";
    tt.texts_[TaskKind::RingCount] =
        "Count the number of {k}-membered rings in the molecule with SMILES "
        "{smiles}. Answer with a single integer.";
    tt.texts_[TaskKind::ChainLength] =
        "Determine the number of atoms in the longest carbon chain, "
        "excluding ring atoms, of the molecule with SMILES {smiles}. Answer "
        "with a single integer.";
    tt.texts_[TaskKind::Canonicalization] =
        "Convert the SMILES {smiles} into its canonical form. Answer with "
        "the canonical SMILES string.";
    tt.texts_[TaskKind::FragmentAssembly] =
        "Combine the two SMILES fragments {smiles} into a single valid "
        "molecule by joining their attachment points. Answer with the SMILES "
        "of the assembled molecule.";
    tt.validate();
    return tt;
  }

  /// Plain-text config: a "[task_name]" header per block followed by the
  /// template text. Missing tasks fall back to the defaults.
  static TaskTemplates load(const std::string &path) {
    std::ifstream in(path);
    if (!in)
      throw ConfigError("cannot open template file: " + path);
    TaskTemplates tt = defaults();
    std::string line;
    std::size_t lineno = 0;
    TaskKind current = TaskKind::FunctionalGroup;
    bool in_block = false;
    std::string buffer;
    auto flush = [&]() {
      if (!in_block)
        return;
      while (!buffer.empty() && (buffer.back() == '\n' || buffer.back() == ' '))
        buffer.pop_back();
      if (buffer.empty())
        throw ConfigError("empty template for " +
                          std::string(task_name(current)));
      tt.texts_[current] = buffer;
      buffer.clear();
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.front() == '[' && line.back() == ']') {
        flush();
        try {
          current = task_from_name(line.substr(1, line.size() - 2));
        } catch (const Error &e) {
          throw ConfigError(e.what(), lineno);
        }
        in_block = true;
      } else if (in_block) {
        if (!buffer.empty())
          buffer += "\n";
        buffer += line;
      } else if (!line.empty() && line[0] != '#') {
        throw ConfigError("text before first [task] header", lineno);
      }
    }
    flush();
    tt.validate();
    return tt;
  }

  std::string dump() const {
    std::string out;
    for (TaskKind t : kAllTasks) {
      out += "[";
      out += task_name(t);
      out += "]\n";
      out += texts_.at(t);
      out += "\n\n";
    }
    return out;
  }

private:
  void validate() const {
    auto require = [&](TaskKind t, const std::string &ph) {
      if (texts_.at(t).find("{" + ph + "}") == std::string::npos)
        throw TemplateError("template for " + std::string(task_name(t)) +
                            " must contain {" + ph + "}");
    };
    for (TaskKind t : kAllTasks)
      require(t, "smiles");
    require(TaskKind::FunctionalGroup, "group");
    require(TaskKind::RingCount, "k");
  }

  std::map<TaskKind, std::string> texts_;
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Yes/no presence question over the group library. Samples the present
/// side with probability 1/2; falls back to the non-empty side when the
/// molecule matches everything or nothing, recording the imbalance.
inline TaskRecord gen_functional_group(const Molecule &mol,
                                       const std::string &source,
                                       const std::vector<FunctionalGroupPattern> &library,
                                       const TaskTemplates &templates,
                                       SplitMix64 &rng) {
  if (library.empty())
    throw SkipSignal("empty group library");
  std::vector<const FunctionalGroupPattern *> present, absent;
  for (const auto &g : library)
    (match_pattern(mol, g) ? present : absent).push_back(&g);
  bool want_present = rng.coin();
  bool forced = false;
  const auto &side = want_present ? present : absent;
  const auto &other = want_present ? absent : present;
  const std::vector<const FunctionalGroupPattern *> *chosen = &side;
  if (side.empty()) {
    if (other.empty())
      throw SkipSignal("no usable functional group side");
    chosen = &other;
    want_present = !want_present;
    forced = true;
  }
  const FunctionalGroupPattern *group = (*chosen)[rng.below(chosen->size())];
  TaskRecord rec;
  rec.task = TaskKind::FunctionalGroup;
  rec.source_smiles = source;
  rec.answer = want_present ? "yes" : "no";
  rec.meta["group"] = group->name;
  rec.meta["forced_side"] = forced;
  rec.prompt = render_prompt(templates.text(TaskKind::FunctionalGroup),
                             {{"smiles", source}, {"group", group->name}});
  rec.sort_canonical = canonicalize(mol);
  return rec;
}

/// Ring-count question for a uniformly sampled size k in {3..8}.
/// Zero-answer questions are retained.
inline TaskRecord gen_ring_count(const Molecule &mol, const std::string &source,
                                 const TaskTemplates &templates,
                                 SplitMix64 &rng) {
  int k = 3 + static_cast<int>(rng.below(6));
  TaskRecord rec;
  rec.task = TaskKind::RingCount;
  rec.source_smiles = source;
  rec.answer = std::to_string(count_rings_of_size(mol, k));
  rec.meta["k"] = k;
  rec.prompt = render_prompt(templates.text(TaskKind::RingCount),
                             {{"smiles", source}, {"k", std::to_string(k)}});
  rec.sort_canonical = canonicalize(mol);
  return rec;
}

/// Longest acyclic carbon chain length. All-ring molecules are skipped:
/// a forced zero would be a degenerate prompt.
inline TaskRecord gen_chain_length(const Molecule &mol,
                                   const std::string &source,
                                   const TaskTemplates &templates) {
  ChainResult chain = longest_carbon_chain(mol);
  if (chain.length == 0)
    throw SkipSignal("no acyclic carbon chain");
  TaskRecord rec;
  rec.task = TaskKind::ChainLength;
  rec.source_smiles = source;
  rec.answer = std::to_string(chain.length);
  rec.prompt = render_prompt(templates.text(TaskKind::ChainLength),
                             {{"smiles", source}});
  rec.sort_canonical = canonicalize(mol);
  return rec;
}

/// Canonicalization question: the prompt shows a seeded random
/// rendering, the gold answer is our canonical string.
inline TaskRecord gen_canonicalization(const Molecule &mol,
                                       const TaskTemplates &templates,
                                       SplitMix64 &rng) {
  std::uint64_t render_seed = rng.next();
  TaskRecord rec;
  rec.task = TaskKind::Canonicalization;
  rec.source_smiles = randomized_smiles(mol, render_seed);
  rec.answer = canonicalize(mol);
  rec.meta["render_seed"] = render_seed;
  rec.prompt = render_prompt(templates.text(TaskKind::Canonicalization),
                             {{"smiles", rec.source_smiles}});
  rec.sort_canonical = rec.answer;
  return rec;
}

/// Fragment-assembly question over a uniformly chosen qualifying cut.
/// source_smiles is the dot-joined fragment pair shown in the prompt.
inline TaskRecord gen_fragment_assembly(const Molecule &mol,
                                        const TaskTemplates &templates,
                                        SplitMix64 &rng) {
  auto cuts = enumerate_cut_bonds(mol);
  if (cuts.empty())
    throw SkipSignal("no qualifying cut bond");
  auto bond = cuts[rng.below(cuts.size())];
  FragmentPair pair = cut(mol, bond);
  TaskRecord rec;
  rec.task = TaskKind::FragmentAssembly;
  rec.source_smiles = pair.frag_a_smiles + "." + pair.frag_b_smiles;
  rec.answer = pair.parent_canonical;
  rec.meta["frag_a"] = pair.frag_a_smiles;
  rec.meta["frag_b"] = pair.frag_b_smiles;
  rec.meta["cut_bond"] = {bond.first, bond.second};
  rec.prompt = render_prompt(templates.text(TaskKind::FragmentAssembly),
                             {{"smiles", rec.source_smiles},
                              {"frag_a", pair.frag_a_smiles},
                              {"frag_b", pair.frag_b_smiles}});
  rec.sort_canonical = rec.answer;
  return rec;
}

/// Dispatch helper used by the dataset builder.
inline TaskRecord generate_task(TaskKind task, const Molecule &mol,
                                const std::string &source,
                                const std::vector<FunctionalGroupPattern> &library,
                                const TaskTemplates &templates,
                                SplitMix64 &rng) {
  switch (task) {
  case TaskKind::FunctionalGroup:
    return gen_functional_group(mol, source, library, templates, rng);
  case TaskKind::RingCount:
    return gen_ring_count(mol, source, templates, rng);
  case TaskKind::ChainLength:
    return gen_chain_length(mol, source, templates);
  case TaskKind::Canonicalization:
    return gen_canonicalization(mol, templates, rng);
  case TaskKind::FragmentAssembly:
    return gen_fragment_assembly(mol, templates, rng);
  }
  throw Error("unreachable task kind");
}

} // namespace molparse
