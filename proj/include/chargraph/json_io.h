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

#ifndef CHARGRAPH_JSON_IO_H_
#define CHARGRAPH_JSON_IO_H_

#include "chargraph/duke.h"
#include "chargraph/graph.h"
#include "json.hpp"

namespace chargraph {

using Json = nlohmann::json;

// Stable wire shapes. Object keys are emitted sorted.
Json GraphToJson(const PrimeGraph& g);
PrimeGraph GraphFromJson(const Json& j);

Json CertificateToJson(const BipartiteCertificate& cert);
Json PartitionToJson(const DukePartition& part);
DukePartition PartitionFromJson(const Json& j);
Json VerdictToJson(const DukeVerdict& verdict);
Json ReportToJson(const FeasibilityReport& report);
// Throws Error(kMalformed) on shape mismatch.
FeasibilityReport ReportFromJson(const Json& j);

// Two-space indent, trailing newline.
std::string Pretty(const Json& j);

}  // namespace chargraph

#endif  // CHARGRAPH_JSON_IO_H_
