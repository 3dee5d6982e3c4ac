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

#ifndef DEFCOH_PROBLEM_HPP
#define DEFCOH_PROBLEM_HPP

/// \file problem.hpp
/// JSON problem files and reports, shared by the command-line tool and the
/// tests. A problem file looks like
///
///     {
///       "field": "F2",
///       "algebras": {
///         "B": {"base": {"vars": ["t"], "relations": ["t^2"]},
///               "vars": ["x"], "relations": ["x^2", "t*x"]}
///       },
///       "modules": {
///         "k": {"algebra": "B", "residue": true},
///         "J": {"algebra": "B", "labels": ["1", "x"],
///               "action": {"x": [[0, 0], [1, 0]]}}
///       },
///       "problems": [
///         {"kind": "tmods", "algebra": "B", "module": "k"},
///         {"kind": "deform", "algebra": "B", "module": "J",
///          "base_lift": ["t^3"], "base_ideal": ["t^2"], "phi": [[0, 1]]}
///       ],
///       "options": {"truncate": 0, "oracle": false, "budget": 1048576}
///     }
///
/// Modules may also be {"algebra": "B", "regular": d}, the algebra B/(x)^d
/// acting on itself. Missing action matrices are zero. Lift stanzas name a
/// finite-dimensional "target" algebra C', an "ideal" of C' (so C = C'/ideal)
/// and "images" of the generators of the source as polynomials in C';
/// base generators of the source take "base_images" in C'.

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace defcoh {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kBudgetExceeded = 2, kOracleMismatch = 3 };

/// Malformed or inconsistent input; `what()` starts with a JSON path.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what) : std::runtime_error(where + ": " + what) {}
};

struct RunOptions {
  bool json = false;
  bool oracle = false;
  unsigned truncate = 0;       // 0: file option, else the default bound
  std::uint64_t budget = 0;    // 0: file option, else 2^20
  std::string field;           // empty: the file's field
  std::uint64_t seed = 0;
};

struct RunResult {
  int exit_code = kOk;
  nlohmann::ordered_json report;
  std::string text;
};

/// Runs the stanzas of one kind ("tmods", "exal", "lift", "deform"), or all
/// of them with oracles on ("oracle").
RunResult run_problems(const std::string& command, const nlohmann::ordered_json& doc, const RunOptions& options);

/// Reads `path` and calls run_problems; unreadable or malformed files give
/// exit code 1.
RunResult run_file(const std::string& command, const std::string& path, const RunOptions& options);

}  // namespace defcoh

#endif  // DEFCOH_PROBLEM_HPP
