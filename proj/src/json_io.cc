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

#include "chargraph/json_io.h"

#include <string>

#include "chargraph/errors.h"

namespace chargraph {
namespace {

Json PrimesOrNull(const std::optional<Prime>& p) {
  return p ? Json(*p) : Json(nullptr);
}

Json FindingToJson(const Finding& f) {
  Json cert = Json::object();
  switch (f.code) {
    case ReasonCode::kDiameterExceeds3:
      cert["pair"] = {f.far_pair->first, f.far_pair->second};
      cert["distance"] = f.far_distance;
      break;
    case ReasonCode::kDiam3NotDuke:
      cert["kind"] = NonDukeKindName(f.non_duke->kind);
      if (!f.non_duke->odd_cycle.empty()) {
        cert["complement_odd_cycle"] = f.non_duke->odd_cycle;
      }
      if (!f.non_duke->parts.empty()) cert["parts"] = f.non_duke->parts;
      break;
    case ReasonCode::kDiam3ComplementNotBipartite:
      cert["complement_odd_cycle"] = f.complement_odd_cycle;
      break;
    case ReasonCode::kDiam3Undominated:
      cert["p"] = f.undominated->p;
      cert["q"] = f.undominated->q;
      cert["t"] = f.undominated->t;
      break;
  }
  return {{"code", ReasonCodeName(f.code)}, {"certificate", cert}};
}

ReasonCode ReasonFromName(const std::string& name) {
  for (ReasonCode c :
       {ReasonCode::kDiameterExceeds3, ReasonCode::kDiam3NotDuke,
        ReasonCode::kDiam3ComplementNotBipartite,
        ReasonCode::kDiam3Undominated}) {
    if (ReasonCodeName(c) == name) return c;
  }
  throw Error(ErrorCode::kMalformed, "unknown reason code " + name);
}

NonDukeCertificate::Kind NonDukeKindFromName(const std::string& name) {
  using Kind = NonDukeCertificate::Kind;
  for (Kind k : {Kind::kComplementOddCycle, Kind::kDisconnected,
                 Kind::kComplementDisconnected, Kind::kOrientationsExhausted}) {
    if (NonDukeKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kMalformed, "unknown non-duke kind " + name);
}

Finding FindingFromJson(const Json& j) {
  Finding f;
  f.code = ReasonFromName(j.at("code").get<std::string>());
  const Json& cert = j.at("certificate");
  switch (f.code) {
    case ReasonCode::kDiameterExceeds3:
      f.far_pair = std::make_pair(cert.at("pair").at(0).get<Prime>(),
                                  cert.at("pair").at(1).get<Prime>());
      f.far_distance = cert.at("distance").get<int>();
      break;
    case ReasonCode::kDiam3NotDuke: {
      NonDukeCertificate nd;
      nd.kind = NonDukeKindFromName(cert.at("kind").get<std::string>());
      if (cert.contains("complement_odd_cycle")) {
        nd.odd_cycle = cert["complement_odd_cycle"].get<std::vector<Prime>>();
      }
      if (cert.contains("parts")) {
        nd.parts = cert["parts"].get<std::vector<std::vector<Prime>>>();
      }
      f.non_duke = std::move(nd);
      break;
    }
    case ReasonCode::kDiam3ComplementNotBipartite:
      f.complement_odd_cycle =
          cert.at("complement_odd_cycle").get<std::vector<Prime>>();
      break;
    case ReasonCode::kDiam3Undominated:
      f.undominated = DominationCounterexample{
          cert.at("p").get<Prime>(), cert.at("q").get<Prime>(),
          cert.at("t").get<Prime>()};
      break;
  }
  return f;
}

}  // namespace

Json GraphToJson(const PrimeGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

PrimeGraph GraphFromJson(const Json& j) {
  std::vector<Edge> edges;
  for (const Json& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<Prime>(), e.at(1).get<Prime>());
  }
  return PrimeGraph(j.at("vertices").get<std::vector<Prime>>(), edges);
}

Json CertificateToJson(const BipartiteCertificate& cert) {
  Json j = {{"bipartite", cert.bipartite}};
  if (cert.bipartite) {
    Json coloring = Json::object();
    for (const auto& [p, c] : cert.coloring) coloring[std::to_string(p)] = c;
    j["coloring"] = coloring;
  } else {
    j["odd_cycle"] = cert.odd_cycle;
  }
  return j;
}

Json PartitionToJson(const DukePartition& part) {
  Json j = {{"rho1", part.rho1},
            {"rho2", part.rho2},
            {"rho3", part.rho3},
            {"rho4", part.rho4},
            {"witness", nullptr}};
  if (part.witness) {
    j["witness"] = {{"p", part.witness->p}, {"q", part.witness->q}};
  }
  return j;
}

DukePartition PartitionFromJson(const Json& j) {
  DukePartition part{j.at("rho1").get<std::vector<Prime>>(),
                     j.at("rho2").get<std::vector<Prime>>(),
                     j.at("rho3").get<std::vector<Prime>>(),
                     j.at("rho4").get<std::vector<Prime>>(), std::nullopt};
  if (j.contains("witness") && !j["witness"].is_null()) {
    part.witness = WitnessPair{j["witness"].at("p").get<Prime>(),
                               j["witness"].at("q").get<Prime>()};
  }
  return part;
}

Json VerdictToJson(const DukeVerdict& verdict) {
  Json violations = Json::array();
  for (const DukeViolation& v : verdict.violations) {
    Json item = {{"condition", DukeConditionName(v.condition)},
                 {"vertices", {v.first}}};
    if (v.second) item["vertices"].push_back(*v.second);
    violations.push_back(item);
  }
  return {{"passed", verdict.passed}, {"violations", violations}};
}

Json ReportToJson(const FeasibilityReport& report) {
  Json reasons = Json::array();
  for (const Finding& f : report.reasons) reasons.push_back(FindingToJson(f));
  Json j = {{"passed", report.passed},
            {"diameter", report.diameter},
            {"reasons", reasons},
            {"witness", nullptr},
            {"witness_partition", nullptr},
            {"witness_partition_conflict",
             PrimesOrNull(report.witness_partition_conflict)},
            {"duke_partition", nullptr}};
  if (report.witness) {
    j["witness"] = {{"p", report.witness->p}, {"q", report.witness->q}};
  }
  if (report.witness_partition) {
    j["witness_partition"] = PartitionToJson(*report.witness_partition);
  }
  if (report.duke_partition) {
    j["duke_partition"] = PartitionToJson(*report.duke_partition);
  }
  return j;
}

FeasibilityReport ReportFromJson(const Json& j) {
  try {
    FeasibilityReport report;
    report.passed = j.at("passed").get<bool>();
    report.diameter = j.at("diameter").get<int>();
    for (const Json& r : j.at("reasons")) {
      report.reasons.push_back(FindingFromJson(r));
    }
    if (!j.at("witness").is_null()) {
      report.witness = WitnessPair{j["witness"].at("p").get<Prime>(),
                                   j["witness"].at("q").get<Prime>()};
    }
    if (!j.at("witness_partition").is_null()) {
      report.witness_partition = PartitionFromJson(j["witness_partition"]);
    }
    if (!j.at("witness_partition_conflict").is_null()) {
      report.witness_partition_conflict =
          j["witness_partition_conflict"].get<Prime>();
    }
    if (!j.at("duke_partition").is_null()) {
      report.duke_partition = PartitionFromJson(j["duke_partition"]);
    }
    return report;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformed, e.what());
  }
}

std::string Pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace chargraph
