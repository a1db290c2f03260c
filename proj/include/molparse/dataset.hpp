//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "molparse/curation.hpp"
#include "molparse/errors.hpp"
#include "molparse/parse.hpp"
#include "molparse/pattern.hpp"
#include "molparse/rng.hpp"
#include "molparse/tasks.hpp"

namespace molparse {

struct BuildConfig {
  std::string input;
  std::string out;
  std::vector<TaskKind> tasks{kAllTasks.begin(), kAllTasks.end()};
  int per_task = 50000;
  std::uint64_t seed = 42;
  PruneBand band{0.2, 0.8};
  std::string split = "train";            // with split_hash: train|test
  std::optional<double> split_hash;       // test fraction by canonical hash
  std::string template_path;              // empty: embedded defaults
  std::string group_path;                 // empty: embedded defaults
  int over_gen_factor = 3;
  bool interleave = false;
  int jobs = 1;
};

struct TaskStats {
  int generated = 0;
  int deduplicated = 0;
  int pruned_out = 0;
  int emitted = 0;
  std::map<std::string, int> skips;
  double diff_min = 0, diff_median = 0, diff_max = 0;
};

struct DatasetManifest {
  std::uint64_t seed = 0;
  PruneBand band;
  int per_task_target = 0;
  std::map<std::string, TaskStats> tasks;
  int total_emitted = 0;
  int parse_failures = 0;
  bool interleaved = false;
  std::string content_hash;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["band"] = {{"low", band.low}, {"high", band.high}};
    j["per_task_target"] = per_task_target;
    nlohmann::ordered_json jt = nlohmann::ordered_json::object();
    for (const auto &[name, st] : tasks) {
      nlohmann::ordered_json s;
      s["generated"] = st.generated;
      s["deduplicated"] = st.deduplicated;
      s["pruned_out"] = st.pruned_out;
      s["emitted"] = st.emitted;
      s["skips"] = st.skips;
      s["difficulty"] = {{"min", st.diff_min},
                         {"median", st.diff_median},
                         {"max", st.diff_max}};
      jt[name] = s;
    }
    j["tasks"] = jt;
    j["total_emitted"] = total_emitted;
    j["parse_failures"] = parse_failures;
    j["interleaved"] = interleaved;
    j["content_hash"] = content_hash;
    return j;
  }
};

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  static const char *digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSONL
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json record_to_json(const TaskRecord &r) {
  nlohmann::ordered_json j;
  j["task"] = task_name(r.task);
  j["source_smiles"] = r.source_smiles;
  j["prompt"] = r.prompt;
  j["answer"] = r.answer;
  j["difficulty"] = r.difficulty;
  j["meta"] = r.meta;
  return j;
}

/// One object per line, keys in fixed order, newline-terminated.
/// Returns the number of lines written.
inline int emit_jsonl(const std::vector<TaskRecord> &records,
                      const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IOError("cannot open for writing: " + path);
  for (const auto &r : records)
    out << record_to_json(r).dump() << "\n";
  if (!out)
    throw IOError("write failure: " + path);
  return static_cast<int>(records.size());
}

/// Inverse of emit_jsonl. Blank lines are tolerated; malformed lines are
/// collected and reported together with their line numbers.
inline std::vector<TaskRecord> load_jsonl(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IOError("cannot open: " + path);
  std::vector<TaskRecord> out;
  std::vector<std::string> bad;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      auto j = nlohmann::ordered_json::parse(line);
      TaskRecord r;
      r.task = task_from_name(j.at("task").get<std::string>());
      r.source_smiles = j.at("source_smiles").get<std::string>();
      r.prompt = j.at("prompt").get<std::string>();
      r.answer = j.at("answer").get<std::string>();
      r.difficulty = j.at("difficulty").get<double>();
      r.meta = j.at("meta");
      out.push_back(std::move(r));
    } catch (const std::exception &e) {
      bad.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!bad.empty()) {
    std::string msg = "malformed JSONL records:";
    for (const auto &b : bad)
      msg += "\n  " + b;
    throw SchemaError(msg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

struct CorpusMolecule {
  Molecule mol;
  std::string smiles;
};

/// Reads a .smi file (SMILES [whitespace id] per line). Parse failures
/// are counted, never fatal. With split_hash set, molecules are routed
/// to train/test by a stable hash of their canonical form.
inline std::vector<CorpusMolecule> load_corpus(const BuildConfig &config,
                                               int *parse_failures) {
  std::ifstream in(config.input);
  if (!in)
    throw IOError("cannot open corpus: " + config.input);
  std::vector<CorpusMolecule> out;
  std::string line;
  int failures = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string smiles;
    if (!(ls >> smiles) || smiles[0] == '#')
      continue;
    try {
      Molecule mol = parse(smiles);
      if (config.split_hash) {
        double frac =
            static_cast<double>(fnv1a64(canonicalize(mol)) % 100000) / 100000.0;
        bool is_test = frac < *config.split_hash;
        if ((config.split == "test") != is_test)
          continue;
      }
      out.push_back(CorpusMolecule{std::move(mol), std::move(smiles)});
    } catch (const Error &) {
      ++failures;
    }
  }
  if (parse_failures)
    *parse_failures = failures;
  return out;
}

// ---------------------------------------------------------------------------
// Build pipeline
// ---------------------------------------------------------------------------

namespace detail {

/// Generates candidates for one task over the corpus in blocks. Workers
/// fan out within a block; results are appended in molecule order, so
/// the output is independent of the job count.
inline std::vector<TaskRecord>
generate_candidates(TaskKind task, const std::vector<CorpusMolecule> &corpus,
                    const std::vector<FunctionalGroupPattern> &library,
                    const TaskTemplates &templates, const BuildConfig &config,
                    TaskStats &stats) {
  const std::size_t cap =
      static_cast<std::size_t>(config.over_gen_factor) *
      static_cast<std::size_t>(config.per_task);
  std::vector<TaskRecord> kept;
  std::set<std::string> seen; // (source_smiles, meta) dedupe key
  const int jobs = std::max(1, config.jobs);
  const std::size_t block = std::max<std::size_t>(256, 256 * jobs);

  for (std::size_t base = 0; base < corpus.size() && kept.size() < cap;
       base += block) {
    std::size_t end = std::min(corpus.size(), base + block);
    std::vector<std::optional<TaskRecord>> results(end - base);
    std::vector<std::string> skip_reason(end - base);
    auto worker = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        SplitMix64 rng =
            derive_stream(config.seed, i, static_cast<std::uint64_t>(task));
        try {
          TaskRecord rec = generate_task(task, corpus[i].mol, corpus[i].smiles,
                                         library, templates, rng);
          apply_difficulty(rec);
          results[i - base] = std::move(rec);
        } catch (const SkipSignal &s) {
          skip_reason[i - base] = s.reason();
        }
      }
    };
    if (jobs == 1) {
      worker(base, end);
    } else {
      std::vector<std::thread> threads;
      std::size_t span = (end - base + jobs - 1) / jobs;
      for (int t = 0; t < jobs; ++t) {
        std::size_t lo = base + t * span;
        std::size_t hi = std::min(end, lo + span);
        if (lo < hi)
          threads.emplace_back(worker, lo, hi);
      }
      for (auto &th : threads)
        th.join();
    }
    for (std::size_t i = 0; i < results.size() && kept.size() < cap; ++i) {
      if (!results[i]) {
        stats.skips[skip_reason[i]]++;
        continue;
      }
      stats.generated++;
      std::string key = results[i]->source_smiles + "\x1f" +
                        results[i]->meta.dump();
      if (!seen.insert(std::move(key)).second) {
        stats.deduplicated++;
        continue;
      }
      kept.push_back(std::move(*results[i]));
    }
  }
  return kept;
}

} // namespace detail

/// Full pipeline: parse -> generate -> score -> prune -> curriculum sort
/// -> truncate -> emit JSONL plus a `<out>.manifest.json` sidecar.
/// Byte-identical across reruns of the same config and job counts.
inline DatasetManifest build(const BuildConfig &config) {
  if (config.per_task < 1)
    throw ConfigError("per_task must be >= 1");
  if (config.tasks.empty())
    throw ConfigError("task list must be non-empty");
  config.band.validate();

  DatasetManifest manifest;
  manifest.seed = config.seed;
  manifest.band = config.band;
  manifest.per_task_target = config.per_task;
  manifest.interleaved = config.interleave;

  auto library = config.group_path.empty() ? default_group_library()
                                           : load_group_library(config.group_path);
  auto templates = config.template_path.empty()
                       ? TaskTemplates::defaults()
                       : TaskTemplates::load(config.template_path);
  auto corpus = load_corpus(config, &manifest.parse_failures);

  // Fixed task order regardless of the order given in config.
  std::vector<TaskKind> tasks;
  for (TaskKind t : kAllTasks)
    if (std::find(config.tasks.begin(), config.tasks.end(), t) !=
        config.tasks.end())
      tasks.push_back(t);

  std::map<TaskKind, std::vector<TaskRecord>> final_blocks;
  std::vector<std::string> shortfalls;
  for (TaskKind task : tasks) {
    TaskStats stats;
    auto candidates = detail::generate_candidates(task, corpus, library,
                                                  templates, config, stats);
    std::vector<TaskRecord> survivors =
        candidates.empty() ? candidates : prune(candidates, config.band);
    stats.pruned_out = static_cast<int>(candidates.size() - survivors.size());
    survivors = curriculum_sort(std::move(survivors));
    if (static_cast<int>(survivors.size()) < config.per_task) {
      shortfalls.push_back(std::string(task_name(task)) + ": need " +
                           std::to_string(config.per_task) + ", have " +
                           std::to_string(survivors.size()));
    }
    if (static_cast<int>(survivors.size()) > config.per_task)
      survivors.resize(config.per_task); // keep the easy end
    stats.emitted = static_cast<int>(survivors.size());
    if (!survivors.empty()) {
      std::vector<double> ds;
      for (const auto &r : survivors)
        ds.push_back(r.difficulty);
      std::sort(ds.begin(), ds.end());
      stats.diff_min = ds.front();
      stats.diff_max = ds.back();
      stats.diff_median = ds[ds.size() / 2];
    }
    manifest.tasks[task_name(task)] = stats;
    final_blocks[task] = std::move(survivors);
  }
  if (!shortfalls.empty()) {
    std::string msg = "corpus cannot fill the requested per-task counts:";
    for (const auto &s : shortfalls)
      msg += "\n  " + s;
    throw InsufficientCorpusError(msg);
  }

  std::vector<TaskRecord> all;
  if (config.interleave) {
    for (int i = 0; i < config.per_task; ++i)
      for (TaskKind task : tasks)
        all.push_back(std::move(final_blocks[task][i]));
  } else {
    for (TaskKind task : tasks)
      for (auto &r : final_blocks[task])
        all.push_back(std::move(r));
  }

  manifest.total_emitted = emit_jsonl(all, config.out);

  {
    std::ifstream f(config.out, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    manifest.content_hash = fnv1a64_hex(buf.str());
  }
  std::ofstream mf(config.out + ".manifest.json");
  if (!mf)
    throw IOError("cannot write manifest for " + config.out);
  mf << manifest.to_json().dump(2) << "\n";
  return manifest;
}

} // namespace molparse
