//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "molparse/errors.hpp"

namespace molparse {

enum class TokenKind {
  OrganicAtom,
  BracketAtom,
  Bond,
  BranchOpen,
  BranchClose,
  RingBondDigit,
  Dot,
};

struct SmilesToken {
  TokenKind kind;
  std::string text;
  std::size_t position = 0; // 0-based character offset
  int ring_label = 0;       // 1..99, RingBondDigit only
};

/// Splits a SMILES string into tokens. Total on the accepted alphabet:
/// the concatenation of token texts reproduces the input exactly.
inline std::vector<SmilesToken> tokenize(std::string_view text) {
  if (text.empty())
    throw LexError("empty SMILES", 0);
  std::vector<SmilesToken> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    switch (c) {
    case '(':
      out.push_back({TokenKind::BranchOpen, "(", i, 0});
      ++i;
      continue;
    case ')':
      out.push_back({TokenKind::BranchClose, ")", i, 0});
      ++i;
      continue;
    case '-':
    case '=':
    case '#':
      out.push_back({TokenKind::Bond, std::string(1, c), i, 0});
      ++i;
      continue;
    case '.':
      out.push_back({TokenKind::Dot, ".", i, 0});
      ++i;
      continue;
    case '/':
    case '\\':
      throw LexError("stereo bond markers are not supported", i);
    case '%': {
      if (i + 2 >= n || !std::isdigit(static_cast<unsigned char>(text[i + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text[i + 2])))
        throw LexError("'%' must be followed by two digits", i);
      int label = (text[i + 1] - '0') * 10 + (text[i + 2] - '0');
      if (label == 0)
        throw LexError("ring label 0 is not valid", i);
      out.push_back({TokenKind::RingBondDigit, std::string(text.substr(i, 3)), i, label});
      i += 3;
      continue;
    }
    case '[': {
      std::size_t close = text.find(']', i + 1);
      if (close == std::string_view::npos)
        throw LexError("unterminated bracket atom", i);
      out.push_back({TokenKind::BracketAtom, std::string(text.substr(i, close - i + 1)), i, 0});
      i = close + 1;
      continue;
    }
    default:
      break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back({TokenKind::RingBondDigit, std::string(1, c), i, c - '0'});
      ++i;
      continue;
    }
    // Two-letter organic subset symbols first.
    if (c == 'C' && i + 1 < n && text[i + 1] == 'l') {
      out.push_back({TokenKind::OrganicAtom, "Cl", i, 0});
      i += 2;
      continue;
    }
    if (c == 'B' && i + 1 < n && text[i + 1] == 'r') {
      out.push_back({TokenKind::OrganicAtom, "Br", i, 0});
      i += 2;
      continue;
    }
    switch (c) {
    case 'B':
    case 'C':
    case 'N':
    case 'O':
    case 'P':
    case 'S':
    case 'F':
    case 'I':
    case 'b':
    case 'c':
    case 'n':
    case 'o':
    case 'p':
    case 's':
      out.push_back({TokenKind::OrganicAtom, std::string(1, c), i, 0});
      ++i;
      continue;
    case '@':
      throw LexError("stereo centers are not supported", i);
    default:
      throw LexError(std::string("unexpected character '") + c + "'", i);
    }
  }
  return out;
}

} // namespace molparse
