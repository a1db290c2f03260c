//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "molparse/canonical.hpp"
#include "molparse/errors.hpp"
#include "molparse/parse.hpp"
#include "molparse/tasks.hpp"

namespace molparse {

struct Prediction {
  int id = 0; // 0-based gold line index
  std::string raw_output;
};

struct TaskAccuracy {
  int correct = 0;
  int total = 0;
  double accuracy() const { return total == 0 ? 0.0 : double(correct) / total; }
};

struct AccuracyReport {
  std::map<std::string, TaskAccuracy> per_task;
  int correct = 0;
  int total = 0;
  int missing = 0;            // gold records without a prediction
  int extraction_failures = 0;
  int invalid_smiles = 0;     // SMILES-answer tasks whose candidate fails to parse

  double overall() const { return total == 0 ? 0.0 : double(correct) / total; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json jt = nlohmann::ordered_json::object();
    for (const auto &[name, t] : per_task)
      jt[name] = {{"correct", t.correct},
                  {"total", t.total},
                  {"accuracy", t.accuracy()}};
    j["per_task"] = jt;
    j["overall"] = {{"correct", correct}, {"total", total}, {"accuracy", overall()}};
    j["missing_predictions"] = missing;
    j["extraction_failures"] = extraction_failures;
    j["invalid_smiles"] = invalid_smiles;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << std::left << std::setw(20) << "task" << std::right << std::setw(10)
       << "correct" << std::setw(10) << "total" << std::setw(12) << "accuracy"
       << "\n";
    for (const auto &[name, t] : per_task)
      os << std::left << std::setw(20) << name << std::right << std::setw(10)
         << t.correct << std::setw(10) << t.total << std::setw(12)
         << std::fixed << std::setprecision(4) << t.accuracy() << "\n";
    os << std::left << std::setw(20) << "overall" << std::right << std::setw(10)
       << correct << std::setw(10) << total << std::setw(12) << std::fixed
       << std::setprecision(4) << overall() << "\n";
    return os.str();
  }
};

namespace detail {

inline bool word_boundary(const std::string &s, std::size_t begin,
                          std::size_t end) {
  auto alnum = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  };
  if (begin > 0 && alnum(s[begin - 1]))
    return false;
  if (end < s.size() && alnum(s[end]))
    return false;
  return true;
}

/// Last standalone decimal integer in the text.
inline std::optional<std::string> last_integer(const std::string &s) {
  std::optional<std::string> found;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
      ++j;
    if (word_boundary(s, i, j)) {
      // strip leading zeros, keep a lone zero
      std::size_t nz = i;
      while (nz + 1 < j && s[nz] == '0')
        ++nz;
      found = s.substr(nz, j - nz);
    }
    i = j;
  }
  return found;
}

/// Last whole-word, case-insensitive "yes" or "no".
inline std::optional<std::string> last_yes_no(const std::string &s) {
  std::string lower(s);
  for (auto &c : lower)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::optional<std::string> found;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower.compare(i, 3, "yes") == 0 && word_boundary(lower, i, i + 3))
      found = "yes";
    else if (lower.compare(i, 2, "no") == 0 && word_boundary(lower, i, i + 2))
      found = "no";
  }
  return found;
}

/// Last whitespace-delimited token that parses as SMILES, with
/// surrounding quotes and trailing punctuation stripped.
inline std::optional<std::string> last_smiles_token(const std::string &s) {
  std::istringstream is(s);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok)
    tokens.push_back(tok);
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    std::string t = *it;
    while (!t.empty() && (t.front() == '"' || t.front() == '\''))
      t.erase(t.begin());
    while (!t.empty() &&
           (t.back() == '.' || t.back() == ',' || t.back() == ';' ||
            t.back() == ':' || t.back() == '!' || t.back() == '?' ||
            t.back() == '"' || t.back() == '\''))
      t.pop_back();
    if (t.empty())
      continue;
    try {
      parse(t);
      return t;
    } catch (const Error &) {
      // keep scanning earlier tokens
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Normalizes free-form model text to a comparable answer. Failure is a
/// value (nullopt), never an error.
inline std::optional<std::string> extract_answer(const std::string &raw_output,
                                                 TaskKind task) {
  switch (task) {
  case TaskKind::FunctionalGroup:
    return detail::last_yes_no(raw_output);
  case TaskKind::RingCount:
  case TaskKind::ChainLength:
    return detail::last_integer(raw_output);
  case TaskKind::Canonicalization:
  case TaskKind::FragmentAssembly:
    return detail::last_smiles_token(raw_output);
  }
  return std::nullopt;
}

/// Exact-match scoring. Canonicalization demands the canonical string
/// itself; fragment assembly accepts any rendering of the correct
/// molecule (canonical equality).
inline bool score_record(const std::optional<std::string> &pred,
                         const TaskRecord &gold) {
  if (!pred)
    return false;
  switch (gold.task) {
  case TaskKind::FunctionalGroup:
  case TaskKind::RingCount:
  case TaskKind::ChainLength:
  case TaskKind::Canonicalization:
    return *pred == gold.answer;
  case TaskKind::FragmentAssembly:
    try {
      return canonicalize(parse(*pred)) == gold.answer;
    } catch (const Error &) {
      return false;
    }
  }
  return false;
}

/// Predictions JSONL: {"id": <gold line index>, "raw_output": <text>}.
inline std::vector<Prediction> load_predictions(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IOError("cannot open predictions: " + path);
  std::vector<Prediction> out;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> bad;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      auto j = nlohmann::json::parse(line);
      out.push_back(Prediction{j.at("id").get<int>(),
                               j.at("raw_output").get<std::string>()});
    } catch (const std::exception &e) {
      bad.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!bad.empty()) {
    std::string msg = "malformed prediction records:";
    for (const auto &b : bad)
      msg += "\n  " + b;
    throw SchemaError(msg);
  }
  return out;
}

/// Id-aligned aggregation. Unknown or duplicate prediction ids raise
/// AlignmentError; gold records without a prediction count as missing
/// and incorrect.
inline AccuracyReport score_dataset(const std::vector<Prediction> &preds,
                                    const std::vector<TaskRecord> &golds) {
  std::vector<const std::string *> by_id(golds.size(), nullptr);
  std::vector<char> has(golds.size(), 0);
  std::vector<std::string> raw(golds.size());
  for (const auto &p : preds) {
    if (p.id < 0 || p.id >= static_cast<int>(golds.size()))
      throw AlignmentError("prediction id " + std::to_string(p.id) +
                           " has no gold record");
    if (has[p.id])
      throw AlignmentError("duplicate prediction id " + std::to_string(p.id));
    has[p.id] = 1;
    raw[p.id] = p.raw_output;
  }
  (void)by_id;
  AccuracyReport report;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const TaskRecord &gold = golds[i];
    auto &task = report.per_task[task_name(gold.task)];
    task.total++;
    report.total++;
    if (!has[i]) {
      report.missing++;
      continue;
    }
    auto extracted = extract_answer(raw[i], gold.task);
    if (!extracted) {
      report.extraction_failures++;
      if (gold.task == TaskKind::Canonicalization ||
          gold.task == TaskKind::FragmentAssembly)
        report.invalid_smiles++;
      continue;
    }
    if (score_record(extracted, gold)) {
      task.correct++;
      report.correct++;
    }
  }
  return report;
}

} // namespace molparse
