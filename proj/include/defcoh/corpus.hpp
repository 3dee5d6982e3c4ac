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

#ifndef DEFCOH_CORPUS_HPP
#define DEFCOH_CORPUS_HPP

/// \file corpus.hpp
/// The built-in acceptance corpus: seven criteria, each a batch of
/// analytic computations checked against the enumeration oracles.

#include <cstdint>
#include <string>
#include <vector>

namespace defcoh {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // part of the pass condition
};

/// Runs criteria `only` (all when empty), in order.
std::vector<CriterionResult> run_corpus(std::uint64_t seed = 0, const std::vector<int>& only = {});

/// "PASS 3  title: detail (1.23 s, limit 120 s)"
std::string format_line(const CriterionResult& r);

}  // namespace defcoh

#endif  // DEFCOH_CORPUS_HPP
