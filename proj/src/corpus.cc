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

#include "chargraph/corpus.h"

#include <algorithm>
#include <set>

#include "chargraph/duke.h"
#include "chargraph/errors.h"

namespace chargraph {
namespace {

const std::set<std::string>& KnownFields() {
  static const std::set<std::string> fields{"name", "order", "degrees",
                                            "solvable", "source"};
  return fields;
}

[[noreturn]] void Invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalid, field + ": " + what, std::nullopt, field);
}

std::uint64_t PositiveInteger(const Json& v, const std::string& field) {
  if (v.is_number_unsigned() && v.get<std::uint64_t>() >= 1) {
    return v.get<std::uint64_t>();
  }
  Invalid(field, "expected a positive integer");
}

std::string RequiredString(const Json& obj, const std::string& field) {
  if (!obj.contains(field)) Invalid(field, "missing");
  if (!obj[field].is_string()) Invalid(field, "expected a string");
  return obj[field].get<std::string>();
}

const char* StatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

}  // namespace

GroupRecord DecodeRecord(std::string_view line, ParseMode mode,
                         std::vector<std::string>* warnings) {
  Json obj;
  try {
    obj = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformed, e.what());
  }
  if (!obj.is_object()) {
    throw Error(ErrorCode::kMalformed, "record must be a JSON object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (KnownFields().count(key)) continue;
    if (mode == ParseMode::kStrict) Invalid(key, "unknown field");
    if (warnings) warnings->push_back("ignoring unknown field '" + key + "'");
  }
  GroupRecord rec;
  rec.name = RequiredString(obj, "name");
  rec.source = RequiredString(obj, "source");
  if (obj.contains("order") && !obj["order"].is_null()) {
    rec.order = PositiveInteger(obj["order"], "order");
  }
  if (obj.contains("solvable") && !obj["solvable"].is_null()) {
    if (!obj["solvable"].is_boolean()) Invalid("solvable", "expected a boolean");
    rec.solvable = obj["solvable"].get<bool>();
  }
  if (!obj.contains("degrees")) Invalid("degrees", "missing");
  if (!obj["degrees"].is_array()) Invalid("degrees", "expected an array");
  std::vector<std::uint64_t> degrees;
  for (const Json& d : obj["degrees"]) {
    degrees.push_back(PositiveInteger(d, "degrees"));
  }
  if (std::find(degrees.begin(), degrees.end(), 1) == degrees.end()) {
    Invalid("degrees", "the trivial degree 1 is missing");
  }
  rec.degrees = DegreeSet(degrees);
  if (rec.degrees.values().size() != degrees.size() && warnings) {
    warnings->push_back("record '" + rec.name +
                        "': repeated degrees collapsed");
  }
  return rec;
}

std::optional<RecordProblem> CheckRecordConsistency(const GroupRecord& record) {
  if (!record.order) return std::nullopt;
  const std::uint64_t order = *record.order;
  for (std::uint64_t d : record.degrees.values()) {
    if (order % d != 0) {
      return RecordProblem{"degrees", d,
                           std::to_string(d) + " does not divide the order " +
                               std::to_string(order)};
    }
    if (d > 1 && d * d >= order) {
      return RecordProblem{"degrees", d,
                           std::to_string(d) + " squared is not below the order " +
                               std::to_string(order)};
    }
  }
  return std::nullopt;
}

GroupRecord ParseRecord(std::string_view line, ParseMode mode,
                        std::vector<std::string>* warnings) {
  GroupRecord rec = DecodeRecord(line, mode, warnings);
  if (auto problem = CheckRecordConsistency(rec)) {
    Invalid(problem->field, problem->message);
  }
  return rec;
}

std::string SerializeRecord(const GroupRecord& record) {
  Json j = {{"name", record.name},
            {"degrees", record.degrees.values()},
            {"source", record.source}};
  if (record.order) j["order"] = *record.order;
  if (record.solvable) j["solvable"] = *record.solvable;
  return j.dump();
}

std::vector<GroupRecord> ReadCorpus(std::istream& in, ParseMode mode,
                                    std::vector<std::string>* warnings) {
  std::vector<GroupRecord> records;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(DecodeRecord(line, mode, warnings));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what(),
                  e.vertex(), e.field());
    }
  }
  return records;
}

RecordVerdict VerifyRecord(const GroupRecord& record, std::size_t index) {
  RecordVerdict v;
  v.index = index;
  v.name = record.name;
  const PrimeGraph g = BuildGraph(record.degrees);
  v.vertex_count = g.size();
  v.edge_count = g.edge_count();
  v.component_count = static_cast<int>(Components(g).size());
  if (!g.empty()) v.diameter = Diameter(g);

  CheckOutcome& k0 = v.checks["K0"];
  k0.status = CheckStatus::kPass;
  if (auto problem = CheckRecordConsistency(record)) {
    k0.status = CheckStatus::kFail;
    k0.certificate = {{"field", problem->field},
                      {"degree", problem->degree},
                      {"order", *record.order},
                      {"message", problem->message}};
  }

  CheckOutcome& k1 = v.checks["K1"];
  k1.status = CheckStatus::kPass;
  std::optional<FeasibilityReport> screen;
  if (!g.empty()) screen = Screen(g);
  if (v.diameter && *v.diameter > 3) {
    k1.status = CheckStatus::kFail;
    k1.certificate = ReportToJson(*screen);
  }

  CheckOutcome& k2 = v.checks["K2"];
  if (v.diameter == 3) {
    k2.status = screen->passed ? CheckStatus::kPass : CheckStatus::kFail;
    if (!screen->passed) k2.certificate = ReportToJson(*screen);
  }

  CheckOutcome& k3 = v.checks["K3"];
  if (record.solvable == true) {
    const BipartiteCertificate cert = BipartitionOrOddCycle(Complement(g));
    k3.status = cert.bipartite ? CheckStatus::kPass : CheckStatus::kFail;
    if (!cert.bipartite) k3.certificate = CertificateToJson(cert);
  }

  for (const auto& [id, outcome] : v.checks) {
    if (outcome.status == CheckStatus::kFail) v.passed = false;
  }
  return v;
}

VerdictReport VerifyCorpus(std::span<const GroupRecord> records) {
  VerdictReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    report.entries.push_back(VerifyRecord(records[i], i));
    if (report.entries.back().passed) {
      ++report.passed;
    } else {
      ++report.failed;
      report.overall_pass = false;
    }
  }
  return report;
}

Json VerdictReportToJson(const VerdictReport& report) {
  Json entries = Json::array();
  for (const RecordVerdict& v : report.entries) {
    Json checks = Json::object();
    for (const auto& [id, outcome] : v.checks) {
      checks[id] = {{"status", StatusName(outcome.status)},
                    {"certificate", outcome.certificate}};
    }
    entries.push_back(
        {{"index", v.index},
         {"name", v.name},
         {"graph",
          {{"vertices", v.vertex_count},
           {"edges", v.edge_count},
           {"components", v.component_count},
           {"diameter", v.diameter ? Json(*v.diameter) : Json(nullptr)}}},
         {"checks", checks},
         {"passed", v.passed}});
  }
  return {{"entries", entries},
          {"totals",
           {{"records", report.entries.size()},
            {"passed", report.passed},
            {"failed", report.failed}}},
          {"overall_pass", report.overall_pass}};
}

}  // namespace chargraph
