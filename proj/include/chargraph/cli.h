// Copyright 2026 The chargraph Authors
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

#ifndef CHARGRAPH_CLI_H_
#define CHARGRAPH_CLI_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "chargraph/json_io.h"

namespace chargraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;

struct FuzzOptions {
  int k = 7;                 // vertices: the first k primes, 4..10
  double edge_prob = 0.5;    // in (0, 1]
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out_dir;
};

struct FuzzStats {
  std::uint64_t graphs_generated = 0;
  std::map<int, std::uint64_t> by_diameter;
  std::uint64_t diam3_duke = 0;
  std::uint64_t diam3_nonduke = 0;
  std::uint64_t diam3_complement_bipartite = 0;
  std::uint64_t nonfeasible_emitted = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const FuzzStats&, const FuzzStats&) = default;
};

// Random graphs from std::mt19937_64 seeded with `seed`. Each trial draws
// one 64-bit word per vertex pair (i < j, lexicographic); the edge is
// present when the top 53 bits, read as a fraction in [0, 1), fall below
// edge_prob. Every diameter-3 graph without a duke partition is written to
// out_dir as nonfeasible_<trial>.dot plus nonfeasible_<trial>.json holding
// its FeasibilityReport. Throws Error(kInvalidArgument) on bad ranges.
FuzzStats Fuzz(const FuzzOptions& options);

Json FuzzStatsToJson(const FuzzStats& stats);

// Parses "0.25" or "1/4".
double ParseProbability(const std::string& text);

// Entry point for the chargraph tool; argv excludes the program name.
// Writes one JSON document (or DOT with --format dot) to `out` and
// diagnostics to `err`. Returns 0 on success, 1 when checks fail and 2 on
// usage or input errors.
int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err);

}  // namespace chargraph

#endif  // CHARGRAPH_CLI_H_
