//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "molparse/molparse.hpp"
#include "support/corpus.hpp"

using namespace molparse;

TEST_CASE("canonical ranks form a permutation of 1..n") {
  for (const auto &smiles : testing::curated_smiles()) {
    Molecule mol = parse(smiles);
    AtomRanking ranking = canonical_ranks(mol);
    std::set<int> seen(ranking.rank.begin(), ranking.rank.end());
    INFO(smiles);
    CHECK(static_cast<int>(seen.size()) == mol.atom_count());
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == mol.atom_count());
  }
}

TEST_CASE("equivalent renderings share one canonical string") {
  // Hand-written alternative renderings of the same molecules.
  const std::vector<std::vector<std::string>> groups = {
      {"CCO", "OCC", "C(O)C"},
      {"CC(=O)O", "OC(C)=O", "C(C)(=O)O", "O=C(C)O"},
      {"c1ccccc1", "c1ccc(cc1)"}, // odd but legal branch form
      {"Cc1ccccc1", "c1ccccc1C", "c1ccc(C)cc1"},
      {"CC(C)C", "C(C)(C)C"},
      {"C1CCCCC1", "C2CCCCC2", "C%11CCCCC%11"},
      {"CCOC(=O)C", "CC(=O)OCC", "O(CC)C(C)=O"},
  };
  for (const auto &g : groups) {
    std::set<std::string> canons;
    for (const auto &s : g)
      canons.insert(canonicalize(parse(s)));
    INFO(g.front());
    CHECK(canons.size() == 1);
  }
}

TEST_CASE("canonicalization is idempotent") {
  for (const auto &smiles : testing::mixed_corpus(150, 0x1D)) {
    std::string canon = canonicalize(parse(smiles));
    INFO(smiles);
    CHECK(canonicalize(parse(canon)) == canon);
  }
}

TEST_CASE("randomized renderings preserve the canonical form") {
  for (const auto &smiles : testing::mixed_corpus(80, 0x5EED)) {
    Molecule mol = parse(smiles);
    std::string canon = canonicalize(mol);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      std::string rendering = randomized_smiles(mol, seed);
      INFO(smiles << " seed " << seed << " -> " << rendering);
      CHECK(canonicalize(parse(rendering)) == canon);
    }
  }
}

TEST_CASE("randomized_smiles is seed-deterministic and avoids the canonical "
          "form when it can") {
  Molecule mol = parse("CC(C)Cc1ccc(cc1)C(C)C(=O)O");
  std::string canon = canonicalize(mol);
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    CHECK(randomized_smiles(mol, seed) == randomized_smiles(mol, seed));
    CHECK(randomized_smiles(mol, seed) != canon);
  }
  // Single atom: every rendering equals the canonical string; after the
  // resample budget the collision is accepted.
  Molecule methane = parse("C");
  CHECK(randomized_smiles(methane, 3) == canonicalize(methane));
}

TEST_CASE("distinct molecules get distinct canonical strings") {
  std::set<std::string> canons;
  std::size_t distinct_inputs = 0;
  std::set<std::string> seen_canonical_inputs;
  for (const auto &smiles : testing::curated_smiles()) {
    std::string canon = canonicalize(parse(smiles));
    if (seen_canonical_inputs.insert(canon).second)
      ++distinct_inputs;
    canons.insert(canon);
  }
  // The curated list has no duplicates, so counts must line up.
  CHECK(canons.size() == distinct_inputs);
  CHECK(canons.size() == testing::curated_smiles().size());
}

TEST_CASE("canonical form distinguishes close variants") {
  CHECK(canonicalize(parse("CCO")) != canonicalize(parse("CCN")));
  CHECK(canonicalize(parse("CCO")) != canonicalize(parse("CC=O")));
  CHECK(canonicalize(parse("C1CCCCC1")) != canonicalize(parse("c1ccccc1")));
  CHECK(canonicalize(parse("CC(=O)[O-]")) != canonicalize(parse("CC(=O)O")));
  CHECK(canonicalize(parse("[13CH4]")) != canonicalize(parse("C")));
  CHECK(canonicalize(parse("CCCCCC")) != canonicalize(parse("C1CCCCC1")));
}

TEST_CASE("symmetric molecules terminate with tie-breaking") {
  // Highly symmetric inputs force the rank-doubling path.
  for (const auto &s : {"C1CCCCC1", "c1ccccc1", "CC(C)(C)C", "C1CC1",
                        "c1ccc(-c2ccccc2)cc1", "C1CC2CCC1CC2"}) {
    Molecule mol = parse(s);
    AtomRanking r = canonical_ranks(mol);
    std::set<int> distinct(r.rank.begin(), r.rank.end());
    CHECK(static_cast<int>(distinct.size()) == mol.atom_count());
  }
}
