//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//
// CLI entry point: generate, eval, canon, parse-debug, make-corpus.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "molparse/molparse.hpp"

namespace {

using namespace molparse;

int run_generate(const BuildConfig &config) {
  DatasetManifest manifest = build(config);
  std::cout << manifest.to_json().dump(2) << "\n";
  return 0;
}

int run_eval(const std::string &gold_path, const std::string &pred_path,
             const std::string &report_path) {
  auto golds = load_jsonl(gold_path);
  auto preds = load_predictions(pred_path);
  AccuracyReport report = score_dataset(preds, golds);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out)
      throw IOError("cannot write report: " + report_path);
    out << report.to_json().dump(2) << "\n";
  }
  std::cout << report.to_text();
  return 0;
}

int canon_line(const std::string &smiles, int &failures) {
  try {
    std::cout << canonicalize(parse(smiles)) << "\n";
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << smiles << ": " << e.what() << "\n";
    ++failures;
    return 0;
  }
}

int run_canon(const std::vector<std::string> &inputs, bool stream) {
  int ok = 0, failures = 0;
  if (stream) {
    std::string line;
    while (std::getline(std::cin, line)) {
      std::istringstream ls(line);
      std::string smiles;
      if (ls >> smiles)
        ok += canon_line(smiles, failures);
    }
  } else {
    for (const auto &s : inputs)
      ok += canon_line(s, failures);
  }
  return (ok == 0 && failures > 0) ? 1 : 0;
}

int run_parse_debug(const std::string &smiles,
                    const std::string &group_path) {
  Molecule mol = parse(smiles);
  std::cout << "atoms: " << mol.atom_count() << "\n";
  for (const auto &a : mol.atoms) {
    std::cout << "  " << a.index << " " << a.element
              << (a.aromatic ? " aromatic" : "") << " charge=" << a.formal_charge
              << " H=" << a.total_h()
              << (atom_in_ring(mol, a.index) ? " ring" : "") << "\n";
  }
  std::cout << "bonds: " << mol.bond_count() << "\n";
  for (const auto &b : mol.bonds)
    std::cout << "  " << b.a << "-" << b.b << " " << bond_order_name(b.order)
              << (b.in_ring ? " ring" : "") << "\n";
  RingSet rings = perceive_rings(mol);
  std::cout << "rings: " << rings.rings.size() << "\n";
  for (const auto &r : rings.rings) {
    std::cout << "  size " << r.size() << ":";
    for (int a : r)
      std::cout << " " << a;
    std::cout << "\n";
  }
  ChainResult chain = longest_carbon_chain(mol);
  std::cout << "longest_chain: " << chain.length << "\n";
  std::cout << "canonical: " << canonicalize(mol) << "\n";
  auto library = group_path.empty() ? default_group_library()
                                    : load_group_library(group_path);
  std::cout << "functional_groups:";
  bool any = false;
  for (const auto &g : library)
    if (match_pattern(mol, g)) {
      std::cout << " " << g.name;
      any = true;
    }
  if (!any)
    std::cout << " (none)";
  std::cout << "\n";
  return 0;
}

int run_make_corpus(const std::string &out_path, int count,
                    std::uint64_t seed, int max_atoms) {
  std::ofstream out(out_path);
  if (!out)
    throw IOError("cannot open for writing: " + out_path);
  RandomMoleculeParams params;
  params.max_heavy_atoms = max_atoms;
  RandomMoleculeGenerator gen(seed, params);
  for (int i = 0; i < count; ++i)
    out << gen.next_smiles() << " SYN" << i << "\n";
  std::cout << "wrote " << count << " molecules to " << out_path << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"SMILES parsing task engine: dataset generation, curation, "
               "and evaluation"};
  app.require_subcommand(1);

  // generate
  auto *gen = app.add_subcommand("generate",
                                 "Build a task dataset from a .smi corpus");
  BuildConfig config;
  std::string task_spec = "all";
  std::string band_spec = "0.2:0.8";
  double split_hash = -1.0;
  gen->add_option("--input", config.input, "input .smi corpus")->required();
  gen->add_option("--out", config.out, "output JSONL path")->required();
  gen->add_option("--task", task_spec, "all or comma-separated task names");
  gen->add_option("--per-task", config.per_task, "records per task");
  gen->add_option("--seed", config.seed, "master RNG seed");
  gen->add_option("--band", band_spec, "difficulty percentile band LOW:HIGH");
  gen->add_option("--templates", config.template_path, "prompt template file")
      ->envname("MOLPARSE_TEMPLATES");
  gen->add_option("--groups", config.group_path, "functional group library")
      ->envname("MOLPARSE_GROUPS");
  gen->add_option("--over-gen-factor", config.over_gen_factor,
                  "candidate over-generation multiplier");
  gen->add_flag("--interleave", config.interleave,
                "round-robin tasks instead of per-task blocks");
  gen->add_option("--split", config.split, "train or test (with --split-hash)");
  gen->add_option("--split-hash", split_hash,
                  "test fraction for canonical-hash splitting");
  gen->add_option("--jobs", config.jobs, "worker threads");

  // eval
  auto *ev = app.add_subcommand("eval", "Score predictions against gold");
  std::string gold_path, pred_path, report_path;
  ev->add_option("--gold", gold_path, "gold JSONL dataset")->required();
  ev->add_option("--pred", pred_path, "predictions JSONL")->required();
  ev->add_option("--report", report_path, "report JSON output path");

  // canon
  auto *canon = app.add_subcommand("canon", "Canonicalize SMILES");
  std::vector<std::string> canon_inputs;
  bool canon_stream = false;
  canon->add_option("smiles", canon_inputs, "SMILES strings");
  canon->add_flag("--stdin", canon_stream, "read SMILES lines from stdin");

  // parse-debug
  auto *dbg = app.add_subcommand("parse-debug",
                                 "Print the parsed structure of one SMILES");
  std::string dbg_smiles, dbg_groups;
  dbg->add_option("smiles", dbg_smiles, "SMILES string")->required();
  dbg->add_option("--groups", dbg_groups, "functional group library")
      ->envname("MOLPARSE_GROUPS");

  // make-corpus
  auto *mk = app.add_subcommand("make-corpus",
                                "Write a synthetic .smi corpus for testing");
  std::string mk_out;
  int mk_count = 1000;
  std::uint64_t mk_seed = 42;
  int mk_max_atoms = 24;
  mk->add_option("--out", mk_out, "output .smi path")->required();
  mk->add_option("--count", mk_count, "number of molecules");
  mk->add_option("--seed", mk_seed, "RNG seed");
  mk->add_option("--max-atoms", mk_max_atoms, "max heavy atoms per molecule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (task_spec != "all") {
        config.tasks.clear();
        std::istringstream ts(task_spec);
        std::string name;
        while (std::getline(ts, name, ','))
          config.tasks.push_back(task_from_name(name));
      }
      config.band = PruneBand::parse(band_spec);
      if (split_hash >= 0.0)
        config.split_hash = split_hash;
      return run_generate(config);
    }
    if (ev->parsed())
      return run_eval(gold_path, pred_path, report_path);
    if (canon->parsed()) {
      if (canon_inputs.empty() && !canon_stream)
        canon_stream = true;
      return run_canon(canon_inputs, canon_stream);
    }
    if (dbg->parsed())
      return run_parse_debug(dbg_smiles, dbg_groups);
    if (mk->parsed())
      return run_make_corpus(mk_out, mk_count, mk_seed, mk_max_atoms);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
