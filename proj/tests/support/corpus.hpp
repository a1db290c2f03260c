//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared test fixtures: a curated list of real, hand-checked SMILES
// plus helpers for synthetic corpora.

#pragma once

#include <string>
#include <vector>

#include "molparse/molparse.hpp"

namespace molparse::testing {

/// Real drug-like molecules, all valid in the supported SMILES dialect.
inline const std::vector<std::string> &curated_smiles() {
  static const std::vector<std::string> kList = {
      "C",                              // methane
      "CC",                             // ethane
      "CCO",                            // ethanol
      "C=C",                            // ethene
      "C#C",                            // ethyne
      "C#N",                            // hydrogen cyanide
      "CC(C)C",                         // isobutane
      "CC(C)(C)O",                      // tert-butanol
      "CC(=O)O",                        // acetic acid
      "CC(=O)C",                        // acetone
      "CC=O",                           // acetaldehyde
      "CCOC(=O)C",                      // ethyl acetate
      "COC",                            // dimethyl ether
      "CCOCC",                          // diethyl ether
      "CNC",                            // dimethylamine
      "CN(C)C",                         // trimethylamine
      "CCN(CC)CC",                      // triethylamine
      "NCCO",                           // ethanolamine
      "OCC(O)CO",                       // glycerol
      "CC(N)C(=O)O",                    // alanine
      "NCC(=O)O",                       // glycine
      "CCS",                           // ethanethiol
      "CSC",                           // dimethyl sulfide
      "CS(=O)(=O)N",                   // methanesulfonamide
      "FC(F)F",                        // fluoroform
      "ClCCCl",                        // 1,2-dichloroethane
      "BrCCBr",                        // 1,2-dibromoethane
      "CCCCCCCC",                      // octane
      "CC(C)CC(C)(C)C",                // isooctane
      "C1CC1",                         // cyclopropane
      "C1CCCCC1",                      // cyclohexane
      "C1CCOC1",                       // tetrahydrofuran
      "C1CCNC1",                       // pyrrolidine
      "O=C1CCCCC1",                    // cyclohexanone
      "C1CC2CCC1CC2",                  // bicyclo[2.2.2]octane
      "c1ccccc1",                      // benzene
      "Cc1ccccc1",                     // toluene
      "Oc1ccccc1",                     // phenol
      "Nc1ccccc1",                     // aniline
      "N#Cc1ccccc1",                   // benzonitrile
      "C=Cc1ccccc1",                   // styrene
      "c1ccc2ccccc2c1",                // naphthalene
      "c1ccncc1",                      // pyridine
      "c1ccoc1",                       // furan
      "c1ccsc1",                       // thiophene
      "c1cc[nH]c1",                    // pyrrole
      "c1ccc(-c2ccccc2)cc1",           // biphenyl
      "c1ccc(cc1)[N+](=O)[O-]",        // nitrobenzene
      "CC(=O)Oc1ccccc1C(=O)O",         // aspirin
      "CC(C)Cc1ccc(cc1)C(C)C(=O)O",    // ibuprofen
      "CC(=O)Nc1ccc(O)cc1",            // paracetamol
      "CC(=O)[O-]",                    // acetate anion
      "C[N+](C)(C)C",                  // tetramethylammonium
      "[NH4+]",                        // ammonium
      "[13CH4]",                       // carbon-13 methane
      "ICI",                           // diiodomethane
  };
  return kList;
}

/// Deterministic mixed corpus: every curated molecule plus synthetic
/// ones up to `total`.
inline std::vector<std::string> mixed_corpus(std::size_t total,
                                             std::uint64_t seed,
                                             int max_heavy_atoms = 20) {
  std::vector<std::string> out = curated_smiles();
  RandomMoleculeParams params;
  params.max_heavy_atoms = max_heavy_atoms;
  RandomMoleculeGenerator gen(seed, params);
  while (out.size() < total)
    out.push_back(gen.next_smiles());
  return out;
}

/// Synthetic-only corpus (no curated prefix); more structural variety
/// per line, useful for small builds whose over-generation cap only
/// reaches the first few entries.
inline std::vector<std::string> synthetic_corpus(std::size_t total,
                                                 std::uint64_t seed,
                                                 int max_heavy_atoms = 20) {
  std::vector<std::string> out;
  RandomMoleculeParams params;
  params.max_heavy_atoms = max_heavy_atoms;
  RandomMoleculeGenerator gen(seed, params);
  while (out.size() < total)
    out.push_back(gen.next_smiles());
  return out;
}

} // namespace molparse::testing
