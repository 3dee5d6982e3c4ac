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

// defcoh: tangent cohomology, extensions, lifts and deformations of
// algebras given by generators and relations.

#include "defcoh/corpus.hpp"
#include "defcoh/problem.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Tangent cohomology and deformations of finitely presented algebras"};
  app.set_version_flag("--version", std::string(defcoh::kVersion));
  app.require_subcommand(1);

  defcoh::RunOptions options;
  std::string path;
  auto add_problem_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", options.json, "print the JSON report");
    sub->add_flag("--oracle", options.oracle, "cross-check with brute-force enumeration");
    sub->add_option("--truncate", options.truncate, "degree bound for infinite-dimensional B");
    sub->add_option("--budget", options.budget, "enumeration budget in search nodes");
    sub->add_option("--field", options.field, "override the field")->check(CLI::IsMember({"F2", "F3", "F5", "Q"}));
    sub->add_option("--seed", options.seed, "seed for the randomized relation lift");
    return sub;
  };
  add_problem_command("tmods", "dimensions of T^0, T^1, T^2 and derivations");
  add_problem_command("exal", "classify extensions of B by J");
  add_problem_command("lift", "lift a homomorphism through a square-zero extension");
  add_problem_command("deform", "obstruction and solution of a deformation over a base change");
  add_problem_command("oracle", "every stanza, cross-checked by enumeration");

  std::uint64_t corpus_seed = 0;
  std::vector<int> only;
  auto* corpus = app.add_subcommand("corpus", "run the built-in acceptance corpus");
  corpus->add_option("--seed", corpus_seed, "seed for randomized checks");
  corpus->add_option("--only", only, "criterion numbers to run")->check(CLI::Range(1, 7));

  CLI11_PARSE(app, argc, argv);

  if (corpus->parsed()) {
    bool ok = true;
    for (const auto& r : defcoh::run_corpus(corpus_seed, only)) {
      std::cout << defcoh::format_line(r) << std::endl;
      ok = ok && r.passed;
    }
    return ok ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  auto result = defcoh::run_file(command, path, options);
  if (options.json)
    std::cout << result.report.dump(2) << '\n';
  else
    std::cout << result.text;
  return result.exit_code;
}
