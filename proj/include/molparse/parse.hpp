//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "molparse/elements.hpp"
#include "molparse/errors.hpp"
#include "molparse/molecule.hpp"
#include "molparse/tokenize.hpp"

namespace molparse {

namespace detail {

/// Parses the interior of a bracket atom: [isotope? symbol Hcount? charge?].
inline Atom parse_bracket_atom(const std::string &text, std::size_t offset) {
  // text includes the surrounding brackets
  std::string_view body(text);
  body.remove_prefix(1);
  body.remove_suffix(1);
  Atom atom;
  std::size_t i = 0;
  auto fail = [&](const std::string &msg) -> ParseError {
    return ParseError(msg, offset + 1 + i);
  };
  // isotope
  if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
    int iso = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
      iso = iso * 10 + (body[i++] - '0');
    atom.isotope = iso;
  }
  if (i >= body.size())
    throw fail("bracket atom lacks an element symbol");
  // element symbol
  if (body[i] == '*') {
    atom.element = kWildcard;
    ++i;
  } else if (std::isupper(static_cast<unsigned char>(body[i]))) {
    std::string sym(1, body[i++]);
    if (i < body.size() && std::islower(static_cast<unsigned char>(body[i])) &&
        body[i] != 'h' &&
        is_periodic_symbol(sym + body[i]))
      sym += body[i++];
    if (!is_periodic_symbol(sym))
      throw fail("unknown element symbol '" + sym + "'");
    atom.element = sym;
  } else if (std::islower(static_cast<unsigned char>(body[i]))) {
    // aromatic bracket symbol: c, n, o, p, s, se, as, b
    std::string low(1, body[i++]);
    if (i < body.size() && std::islower(static_cast<unsigned char>(body[i]))) {
      std::string two = low + body[i];
      if (two == "se" || two == "as") {
        low = two;
        ++i;
      }
    }
    std::string sym = low;
    sym[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sym[0])));
    if (!is_aromatic_eligible(sym))
      throw fail("element '" + sym + "' cannot be aromatic");
    atom.element = sym;
    atom.aromatic = true;
  } else {
    throw fail("invalid bracket atom content");
  }
  // H count
  atom.explicit_h = 0;
  if (i < body.size() && body[i] == 'H') {
    ++i;
    int h = 1;
    if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      h = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
        h = h * 10 + (body[i++] - '0');
    }
    atom.explicit_h = h;
  }
  // charge
  if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
    char sign = body[i];
    int magnitude = 0;
    while (i < body.size() && body[i] == sign) {
      ++magnitude;
      ++i;
    }
    if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      if (magnitude != 1)
        throw fail("mixed repeated-sign and numeric charge");
      magnitude = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
        magnitude = magnitude * 10 + (body[i++] - '0');
    }
    atom.formal_charge = sign == '+' ? magnitude : -magnitude;
  }
  if (i < body.size()) {
    if (body[i] == '@')
      throw fail("stereo centers are not supported");
    throw fail("trailing bracket atom content");
  }
  return atom;
}

struct OpenRing {
  int atom;
  std::optional<BondOrder> order;
  std::size_t offset;
};

inline BondOrder bond_from_symbol(char c) {
  switch (c) {
  case '-':
    return BondOrder::Single;
  case '=':
    return BondOrder::Double;
  default:
    return BondOrder::Triple;
  }
}

/// Checks that every aromatic atom sits in an aromatic ring (at least
/// two in-ring aromatic bonds).
inline void validate_aromaticity(const Molecule &mol) {
  for (const auto &a : mol.atoms) {
    if (!a.aromatic)
      continue;
    int ring_aromatic = 0;
    for (int bi : mol.adjacency[a.index]) {
      const Bond &b = mol.bonds[bi];
      if (b.order == BondOrder::Aromatic && b.in_ring)
        ++ring_aromatic;
    }
    if (ring_aromatic < 2)
      throw ParseError("aromatic atom " + std::to_string(a.index) +
                           " is not part of an aromatic ring",
                       0);
  }
}

inline Molecule parse_tokens(const std::vector<SmilesToken> &tokens) {
  Molecule mol;
  std::vector<int> branch_stack;
  int prev = -1;
  std::optional<BondOrder> pending;
  std::size_t pending_offset = 0;
  std::map<int, OpenRing> open_rings;

  auto attach = [&](int atom_idx) {
    if (prev >= 0) {
      BondOrder order = pending.value_or(
          (mol.atoms[prev].aromatic && mol.atoms[atom_idx].aromatic)
              ? BondOrder::Aromatic
              : BondOrder::Single);
      mol.add_bond(prev, atom_idx, order);
    }
    pending.reset();
    prev = atom_idx;
  };

  for (const auto &tok : tokens) {
    switch (tok.kind) {
    case TokenKind::OrganicAtom: {
      Atom atom;
      if (std::islower(static_cast<unsigned char>(tok.text[0]))) {
        atom.element = tok.text;
        atom.element[0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(atom.element[0])));
        atom.aromatic = true;
      } else {
        atom.element = tok.text;
      }
      attach(mol.add_atom(atom));
      break;
    }
    case TokenKind::BracketAtom:
      attach(mol.add_atom(parse_bracket_atom(tok.text, tok.position)));
      break;
    case TokenKind::Bond:
      if (pending)
        throw ParseError("two consecutive bond symbols", tok.position);
      if (prev < 0)
        throw ParseError("bond symbol before any atom", tok.position);
      pending = bond_from_symbol(tok.text[0]);
      pending_offset = tok.position;
      break;
    case TokenKind::BranchOpen:
      if (prev < 0)
        throw ParseError("branch opens before any atom", tok.position);
      if (pending)
        throw ParseError("bond symbol before '('", tok.position);
      branch_stack.push_back(prev);
      break;
    case TokenKind::BranchClose:
      if (branch_stack.empty())
        throw ParseError("unbalanced ')'", tok.position);
      if (pending)
        throw ParseError("dangling bond symbol before ')'", tok.position);
      prev = branch_stack.back();
      branch_stack.pop_back();
      break;
    case TokenKind::RingBondDigit: {
      if (prev < 0)
        throw ParseError("ring closure before any atom", tok.position);
      auto it = open_rings.find(tok.ring_label);
      if (it == open_rings.end()) {
        open_rings[tok.ring_label] = OpenRing{prev, pending, tok.position};
        pending.reset();
      } else {
        OpenRing open = it->second;
        open_rings.erase(it);
        if (open.atom == prev)
          throw ParseError("ring closure bonds an atom to itself", tok.position);
        if (open.order && pending && *open.order != *pending)
          throw ParseError("conflicting bond symbols on ring closure " +
                               std::to_string(tok.ring_label),
                           tok.position);
        BondOrder order;
        if (open.order)
          order = *open.order;
        else if (pending)
          order = *pending;
        else
          order = (mol.atoms[open.atom].aromatic && mol.atoms[prev].aromatic)
                      ? BondOrder::Aromatic
                      : BondOrder::Single;
        if (mol.find_bond(open.atom, prev))
          throw ParseError("ring closure duplicates an existing bond",
                           tok.position);
        mol.add_bond(open.atom, prev, order);
        pending.reset();
      }
      break;
    }
    case TokenKind::Dot:
      throw ParseError("dot disconnection is not allowed here", tok.position);
    }
  }
  if (!branch_stack.empty())
    throw ParseError("unbalanced '(': missing ')'", tokens.back().position + tokens.back().text.size());
  if (pending)
    throw ParseError("dangling bond symbol at end of input", pending_offset);
  if (!open_rings.empty()) {
    const auto &first = *open_rings.begin();
    throw ParseError("unmatched ring closure " + std::to_string(first.first),
                     first.second.offset);
  }
  if (mol.atoms.empty())
    throw ParseError("no atoms", 0);
  flag_ring_bonds(mol);
  validate_aromaticity(mol);
  assign_implicit_hydrogens(mol);
  return mol;
}

} // namespace detail

/// Parses a single connected molecule. Atom order equals SMILES writing
/// order. Throws LexError / ParseError / ValenceError.
inline Molecule parse(std::string_view text) {
  return detail::parse_tokens(tokenize(text));
}

/// Parses a dot-separated fragment list (fragment context only). Each
/// component must itself be a valid connected molecule.
inline std::vector<Molecule> parse_fragments(std::string_view text) {
  auto tokens = tokenize(text);
  std::vector<std::vector<SmilesToken>> parts(1);
  for (auto &tok : tokens) {
    if (tok.kind == TokenKind::Dot)
      parts.emplace_back();
    else
      parts.back().push_back(tok);
  }
  std::vector<Molecule> out;
  for (auto &part : parts) {
    if (part.empty())
      throw ParseError("empty fragment between dots", 0);
    out.push_back(detail::parse_tokens(part));
  }
  return out;
}

} // namespace molparse
