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

#ifndef CHARGRAPH_CORPUS_H_
#define CHARGRAPH_CORPUS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chargraph/graph.h"
#include "chargraph/json_io.h"

namespace chargraph {

struct GroupRecord {
  std::string name;
  std::optional<std::uint64_t> order;
  DegreeSet degrees{1};
  std::optional<bool> solvable;
  std::string source;

  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

enum class ParseMode { kStrict, kLax };

// Field-level decoding of one JSONL line. Throws Error(kMalformed) for
// syntax errors and Error(kInvalid) (with the field name) for missing,
// mistyped or, in strict mode, unknown fields. Repeated degrees collapse
// and add a warning; lax mode also warns instead of failing on unknown
// fields. Order consistency is not checked here.
GroupRecord DecodeRecord(std::string_view line, ParseMode mode = ParseMode::kStrict,
                         std::vector<std::string>* warnings = nullptr);

struct RecordProblem {
  std::string field;
  std::uint64_t degree;
  std::string message;
};

// With an order: every degree divides it and every degree > 1 squares to
// less than it.
std::optional<RecordProblem> CheckRecordConsistency(const GroupRecord& record);

// DecodeRecord followed by CheckRecordConsistency; inconsistencies throw
// Error(kInvalid).
GroupRecord ParseRecord(std::string_view line, ParseMode mode = ParseMode::kStrict,
                        std::vector<std::string>* warnings = nullptr);

// Single-line JSON, keys sorted.
std::string SerializeRecord(const GroupRecord& record);

// Decodes every non-blank line. Errors are rethrown with the line number
// prefixed to the message.
std::vector<GroupRecord> ReadCorpus(std::istream& in,
                                    ParseMode mode = ParseMode::kStrict,
                                    std::vector<std::string>* warnings = nullptr);

enum class CheckStatus { kPass, kFail, kNotApplicable };

struct CheckOutcome {
  CheckStatus status = CheckStatus::kNotApplicable;
  Json certificate;  // null unless failed
};

// Check ids:
//   K0 record consistency against its order (always applicable)
//   K1 diameter at most 3 (always applicable; vacuous for an empty graph)
//   K2 diameter-3 structure via Screen (applicable at diameter 3)
//   K3 complement bipartite (applicable when flagged solvable)
struct RecordVerdict {
  std::size_t index = 0;
  std::string name;
  int vertex_count = 0;
  int edge_count = 0;
  int component_count = 0;
  std::optional<int> diameter;
  std::map<std::string, CheckOutcome> checks;
  bool passed = true;
};

struct VerdictReport {
  std::vector<RecordVerdict> entries;  // input order
  int passed = 0;
  int failed = 0;
  bool overall_pass = true;
};

RecordVerdict VerifyRecord(const GroupRecord& record, std::size_t index);
VerdictReport VerifyCorpus(std::span<const GroupRecord> records);

Json VerdictReportToJson(const VerdictReport& report);

}  // namespace chargraph

#endif  // CHARGRAPH_CORPUS_H_
