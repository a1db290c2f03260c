//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace molparse {

/// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A character outside the accepted SMILES alphabet. Carries the 0-based
/// offset of the offending character.
class LexError : public Error {
public:
  LexError(const std::string &msg, std::size_t offset)
      : Error(msg + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Structurally invalid SMILES: unmatched ring digits, unbalanced
/// parentheses, conflicting ring-closure bond symbols, stray dots.
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t offset)
      : Error(msg + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Bond-order sum exceeds every allowed valence of the atom.
class ValenceError : public Error {
public:
  using Error::Error;
};

/// Ring-size query outside the supported [3,12] window.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Malformed configuration file (group library or prompt templates).
/// Carries the 1-based line number when known.
class ConfigError : public Error {
public:
  ConfigError(const std::string &msg, std::size_t line = 0)
      : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Prompt template with an unresolved or missing placeholder.
class TemplateError : public Error {
public:
  using Error::Error;
};

/// Cut requested on a bond that is not a qualifying cut bond.
class CutError : public Error {
public:
  using Error::Error;
};

/// Fragment assembly precondition failure (wildcard count, valence).
class AssemblyError : public Error {
public:
  using Error::Error;
};

/// A task generator declining a molecule (degenerate answer, no valid
/// cut, ...). Callers count these per reason; they are never fatal.
class SkipSignal : public Error {
public:
  explicit SkipSignal(const std::string &reason)
      : Error("skipped: " + reason), reason_(reason) {}
  const std::string &reason() const { return reason_; }

private:
  std::string reason_;
};

/// Difficulty band that retains zero records for some task.
class EmptyBandError : public Error {
public:
  using Error::Error;
};

/// Corpus too small to fill the requested per-task record count.
class InsufficientCorpusError : public Error {
public:
  using Error::Error;
};

/// Malformed JSONL dataset or prediction file.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// Prediction ids that cannot be aligned with the gold records.
class AlignmentError : public Error {
public:
  using Error::Error;
};

/// File system failure while reading or writing artifacts.
class IOError : public Error {
public:
  using Error::Error;
};

} // namespace molparse
