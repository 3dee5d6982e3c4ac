// Copyright 2026 The defcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "defcoh/problem.hpp"

#include <gtest/gtest.h>

#include <string>

namespace defcoh {
namespace {

using json = nlohmann::ordered_json;

const std::string kProblems = DEFCOH_PROBLEM_DIR;

json dual_numbers() {
  return json::parse(R"({
    "field": "F2",
    "algebras": {"B": {"vars": ["x"], "relations": ["x^2"]}},
    "modules": {"k": {"algebra": "B", "residue": true}},
    "problems": [{"kind": "tmods", "algebra": "B", "module": "k"},
                 {"kind": "exal", "algebra": "B", "module": "k"}]
  })");
}

TEST(Problems, TmodsReport) {
  auto r = run_problems("tmods", dual_numbers(), {});
  ASSERT_EQ(r.exit_code, kOk);
  const auto& p = r.report["problems"][0];
  EXPECT_EQ(p["T0"], 1);
  EXPECT_EQ(p["T1"], 1);
  EXPECT_EQ(p["T2"], 0);
  EXPECT_EQ(r.report["status"], "ok");
  EXPECT_EQ(r.report["problems"].size(), 1u);
}

TEST(Problems, OracleMatches) {
  RunOptions o;
  o.oracle = true;
  auto r = run_problems("exal", dual_numbers(), o);
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_NE(r.text.find("MATCH"), std::string::npos);
  EXPECT_EQ(r.text.find("MISMATCH"), std::string::npos);
}

TEST(Problems, FieldOverride) {
  RunOptions o;
  o.field = "Q";
  auto r = run_problems("exal", dual_numbers(), o);
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["field"], "Q");
}

TEST(Problems, ReportIsDeterministic) {
  auto a = run_problems("oracle", dual_numbers(), {});
  auto b = run_problems("oracle", dual_numbers(), {});
  EXPECT_EQ(a.report.dump(), b.report.dump());
}

TEST(Problems, ParseErrorsNameTheLocation) {
  auto doc = dual_numbers();
  doc["algebras"]["B"]["relations"][0] = "x^^2";
  auto r = run_problems("tmods", doc, {});
  EXPECT_EQ(r.exit_code, kInvalidInput);
  EXPECT_EQ(r.report["status"], "invalid input");
  EXPECT_EQ(r.report["error"].get<std::string>().rfind("algebras.B.relations[0]", 0), 0u) << r.text;
}

TEST(Problems, UnknownReferences) {
  auto doc = dual_numbers();
  doc["problems"][0]["module"] = "nope";
  EXPECT_EQ(run_problems("tmods", doc, {}).exit_code, kInvalidInput);
  doc = dual_numbers();
  doc["problems"][0]["kind"] = "frobnicate";
  EXPECT_EQ(run_problems("tmods", doc, {}).exit_code, kInvalidInput);
  EXPECT_EQ(run_problems("tmods", dual_numbers(), RunOptions{false, false, 0, 0, "F4", 0}).exit_code, kInvalidInput);
}

TEST(Problems, BudgetExhaustion) {
  auto doc = json::parse(R"({
    "field": "F3",
    "algebras": {"B": {"vars": ["x", "y"], "relations": ["x^2", "x*y", "y^2"]}},
    "modules": {"J": {"algebra": "B", "regular": 0}},
    "problems": [{"kind": "exal", "algebra": "B", "module": "J"}]
  })");
  RunOptions o;
  o.oracle = true;
  o.budget = 10;
  auto r = run_problems("exal", doc, o);
  EXPECT_EQ(r.exit_code, kBudgetExceeded);
  EXPECT_EQ(r.report["status"], "budget exceeded");
}

TEST(Files, ShippedProblems) {
  RunOptions o;
  o.oracle = true;
  for (const char* name : {"dualnumbers", "obstructed_lift", "solvable_lift", "crafted_deform"}) {
    auto r = run_file("oracle", kProblems + "/" + name + ".json", o);
    EXPECT_EQ(r.exit_code, kOk) << name << "\n" << r.text;
  }
}

TEST(Files, FreeAlgebrasHaveNoHigherCohomology) {
  auto r = run_file("tmods", kProblems + "/free.json", {});
  ASSERT_EQ(r.exit_code, kOk);
  for (const auto& p : r.report["problems"]) {
    EXPECT_EQ(p["T1"], 0);
    EXPECT_EQ(p["T2"], 0);
  }
}

TEST(Files, ObstructedLiftClass) {
  auto r = run_file("lift", kProblems + "/obstructed_lift.json", {});
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["problems"][0]["status"], "Obstructed");
  EXPECT_EQ(r.report["problems"][0]["class"], json::parse("[1, 0]"));
}

TEST(Files, MissingFile) {
  auto r = run_file("tmods", kProblems + "/does_not_exist.json", {});
  EXPECT_EQ(r.exit_code, kInvalidInput);
}

}  // namespace
}  // namespace defcoh
