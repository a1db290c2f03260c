//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "molparse/molparse.hpp"
#include "support/corpus.hpp"

using namespace molparse;

namespace {

TaskRecord gold(TaskKind task, const std::string &answer,
                const std::string &source = "CCO") {
  TaskRecord r;
  r.task = task;
  r.source_smiles = source;
  r.prompt = "p";
  r.answer = answer;
  return r;
}

} // namespace

TEST_CASE("integer extraction finds the last standalone integer") {
  auto get = [](const std::string &s) {
    return extract_answer(s, TaskKind::RingCount);
  };
  CHECK(get("3") == "3");
  CHECK(get("The answer is 3.") == "3");
  CHECK(get("first 2, then 5") == "5");
  CHECK(get("007") == "7");
  CHECK(get("0") == "0");
  CHECK(get("ring count: 12\n") == "12");
  CHECK(get("C1CC1 has x rings") == std::nullopt); // digits inside words don't count
  CHECK(get("no digits here") == std::nullopt);
  CHECK(get("") == std::nullopt);
  // A digit embedded in an alphanumeric word is not standalone.
  CHECK(get("abc123def") == std::nullopt);
  CHECK(get("version2 but answer 4") == "4");
}

TEST_CASE("yes/no extraction is case-insensitive, whole-word, last-wins") {
  auto get = [](const std::string &s) {
    return extract_answer(s, TaskKind::FunctionalGroup);
  };
  CHECK(get("yes") == "yes");
  CHECK(get("Yes.") == "yes");
  CHECK(get("NO") == "no");
  CHECK(get("yes... wait, no") == "no");
  CHECK(get("I cannot say") == std::nullopt); // "not" contains no 'no' word
  CHECK(get("nothing matches") == std::nullopt);
  CHECK(get("the answer is yes") == "yes");
  CHECK(get("eyes and nose") == std::nullopt);
}

TEST_CASE("SMILES extraction strips quotes and punctuation, validates") {
  auto get = [](const std::string &s) {
    return extract_answer(s, TaskKind::Canonicalization);
  };
  CHECK(get("CCO") == "CCO");
  CHECK(get("The canonical form is CCO.") == "CCO");
  CHECK(get("\"CCO\"") == "CCO");
  CHECK(get("'c1ccccc1',") == "c1ccccc1");
  CHECK(get("first CCO then CCN") == "CCN");
  // Falls back to an earlier token when the last one fails to parse.
  CHECK(get("CCO C1CC") == "CCO");
  CHECK(get("nothing valid here!") == std::nullopt);
  CHECK(get("") == std::nullopt);
}

TEST_CASE("scoring rules per task") {
  CHECK(score_record(std::string("yes"), gold(TaskKind::FunctionalGroup, "yes")));
  CHECK_FALSE(score_record(std::string("no"),
                           gold(TaskKind::FunctionalGroup, "yes")));
  CHECK(score_record(std::string("4"), gold(TaskKind::RingCount, "4")));
  CHECK_FALSE(score_record(std::nullopt, gold(TaskKind::RingCount, "4")));

  // Canonicalization requires the exact canonical string.
  std::string canon = canonicalize(parse("CCO"));
  CHECK(score_record(canon, gold(TaskKind::Canonicalization, canon)));
  std::string other = canon == "OCC" ? "CCO" : "OCC";
  CHECK_FALSE(score_record(other, gold(TaskKind::Canonicalization, canon)));

  // Fragment assembly accepts any rendering of the right molecule.
  std::string butane = canonicalize(parse("CCCC"));
  CHECK(score_record(std::string("C(C)CC"),
                     gold(TaskKind::FragmentAssembly, butane)));
  CHECK_FALSE(score_record(std::string("CCC"),
                           gold(TaskKind::FragmentAssembly, butane)));
  CHECK_FALSE(score_record(std::string("C1CC"),
                           gold(TaskKind::FragmentAssembly, butane)));
}

TEST_CASE("score_dataset aggregates per task and counts the bookkeeping") {
  std::vector<TaskRecord> golds = {
      gold(TaskKind::RingCount, "1"),
      gold(TaskKind::RingCount, "2"),
      gold(TaskKind::FunctionalGroup, "yes"),
      gold(TaskKind::Canonicalization, canonicalize(parse("CCO"))),
  };
  std::vector<Prediction> preds = {
      {0, "the count is 1"},
      {1, "I think 3"},
      {2, "hard to tell"},  // extraction failure
      // id 3 missing
  };
  AccuracyReport report = score_dataset(preds, golds);
  CHECK(report.total == 4);
  CHECK(report.correct == 1);
  CHECK(report.missing == 1);
  CHECK(report.extraction_failures == 1);
  CHECK(report.per_task.at("ring_count").correct == 1);
  CHECK(report.per_task.at("ring_count").total == 2);
  CHECK(report.per_task.at("functional_group").correct == 0);
  CHECK(report.overall() == 0.25);

  CHECK_THROWS_AS(score_dataset({{7, "x"}}, golds), AlignmentError);
  CHECK_THROWS_AS(score_dataset({{0, "x"}, {0, "y"}}, golds), AlignmentError);
  CHECK_THROWS_AS(score_dataset({{-1, "x"}}, golds), AlignmentError);
}

TEST_CASE("a 7-of-10 fixture scores exactly 0.7") {
  std::vector<TaskRecord> golds;
  std::vector<Prediction> preds;
  for (int i = 0; i < 10; ++i) {
    golds.push_back(gold(TaskKind::RingCount, std::to_string(i)));
    preds.push_back({i, i < 7 ? std::to_string(i) : "wrong 99"});
  }
  AccuracyReport report = score_dataset(preds, golds);
  CHECK(report.correct == 7);
  CHECK(report.total == 10);
  CHECK(report.overall() == 0.7);
}

TEST_CASE("gold answers fed back as predictions score 1.0") {
  auto library = default_group_library();
  auto templates = TaskTemplates::defaults();
  std::vector<TaskRecord> golds;
  for (const auto &smiles : testing::mixed_corpus(40, 0xE7A1)) {
    Molecule mol = parse(smiles);
    for (TaskKind task : kAllTasks) {
      SplitMix64 rng(13);
      try {
        golds.push_back(generate_task(task, mol, smiles, library, templates, rng));
      } catch (const SkipSignal &) {
      }
    }
  }
  REQUIRE(golds.size() > 50u);
  std::vector<Prediction> preds;
  for (std::size_t i = 0; i < golds.size(); ++i)
    preds.push_back({static_cast<int>(i), "Answer: " + golds[i].answer});
  AccuracyReport report = score_dataset(preds, golds);
  CHECK(report.correct == report.total);
  for (const auto &[name, t] : report.per_task)
    CHECK(t.accuracy() == 1.0);
}

TEST_CASE("prediction loader validates records") {
  std::string path = "molparse_test_preds.jsonl";
  {
    std::ofstream out(path);
    out << R"({"id":0,"raw_output":"yes"})" << "\n\n"
        << R"({"id":1,"raw_output":"3"})" << "\n";
  }
  auto preds = load_predictions(path);
  REQUIRE(preds.size() == 2u);
  CHECK(preds[0].id == 0);
  CHECK(preds[1].raw_output == "3");
  {
    std::ofstream out(path);
    out << R"({"id":0})" << "\n";
  }
  CHECK_THROWS_AS(load_predictions(path), SchemaError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_predictions(path), IOError);
}

TEST_CASE("report serialization") {
  AccuracyReport report;
  report.per_task["ring_count"] = {3, 4};
  report.correct = 3;
  report.total = 4;
  auto j = report.to_json();
  CHECK(j.at("overall").at("accuracy").get<double>() == 0.75);
  CHECK(j.at("per_task").at("ring_count").at("correct").get<int>() == 3);
  std::string text = report.to_text();
  CHECK(text.find("ring_count") != std::string::npos);
  CHECK(text.find("overall") != std::string::npos);
  CHECK(text.find("0.7500") != std::string::npos);
}
