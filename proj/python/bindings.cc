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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chargraph/cli.h"
#include "chargraph/corpus.h"
#include "chargraph/duke.h"
#include "chargraph/errors.h"
#include "chargraph/graph.h"
#include "chargraph/json_io.h"
#include "chargraph/primes.h"
#include "chargraph/psl2.h"

namespace py = pybind11;

namespace chargraph {
namespace {

// Reports and partitions cross the boundary as plain dicts in their JSON
// wire shape.
py::object ToPython(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json FromPython(const py::object& obj) {
  return Json::parse(
      py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

}  // namespace
}  // namespace chargraph

PYBIND11_MODULE(_core, m) {
  using namespace chargraph;
  m.doc() = "Character degree graphs: construction, duke partitions, screening";

  py::register_exception<Error>(m, "ChargraphError", PyExc_ValueError);

  m.def("factorize", [](std::uint64_t n) {
    std::vector<std::pair<Prime, int>> out;
    for (const auto& f : Factorize(n)) out.emplace_back(f.prime, f.exponent);
    return out;
  });
  m.def("prime_set", &PrimeSet);
  m.def("prime_power", &PrimePower);

  py::class_<PrimeGraph>(m, "PrimeGraph")
      .def(py::init([](std::vector<Prime> vertices, std::vector<Edge> edges) {
             return PrimeGraph(std::move(vertices), edges);
           }),
           py::arg("vertices"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("vertices", &PrimeGraph::vertices)
      .def_property_readonly("edges", &PrimeGraph::edges)
      .def("adjacent", &PrimeGraph::Adjacent)
      .def("to_dot", [](const PrimeGraph& g) { return ToDot(g); })
      .def("__len__", &PrimeGraph::size)
      .def("__eq__", [](const PrimeGraph& a, const PrimeGraph& b) { return a == b; })
      .def("__repr__", [](const PrimeGraph& g) {
        std::ostringstream s;
        s << "PrimeGraph(" << g.size() << " vertices, " << g.edge_count()
          << " edges)";
        return s.str();
      });

  m.def("build_graph", [](std::vector<std::uint64_t> degrees) {
    return BuildGraph(DegreeSet(std::move(degrees)));
  });
  m.def("complement", &Complement);
  m.def("induced", [](const PrimeGraph& g, std::vector<Prime> subset) {
    return Induced(g, subset);
  });
  m.def("components", &Components);
  m.def("distance", &Distance, "None when unreachable");
  m.def("diameter", &Diameter);
  m.def("is_complete", &IsComplete);
  m.def("parse_dot", [](const std::string& text) { return ParseDot(text); });
  m.def("bipartition_or_odd_cycle", [](const PrimeGraph& g) {
    return ToPython(CertificateToJson(BipartitionOrOddCycle(g)));
  });

  m.def("witness_partition", [](const PrimeGraph& g, Prime p, Prime q) {
    return ToPython(PartitionToJson(WitnessPartition(g, p, q)));
  });
  m.def("verify_duke", [](const PrimeGraph& g, const py::object& partition) {
    return ToPython(VerdictToJson(
        VerifyDuke(g, PartitionFromJson(FromPython(partition)))));
  });
  m.def("find_duke", [](const PrimeGraph& g) -> py::object {
    auto part = FindDuke(g);
    if (!part) return py::none();
    return ToPython(PartitionToJson(*part));
  });
  m.def("check_distance3_domination", [](const PrimeGraph& g) {
    const DominationResult r = CheckDistance3Domination(g);
    py::dict out;
    out["holds"] = r.holds;
    out["counterexample"] =
        r.counterexample
            ? py::object(py::make_tuple(r.counterexample->p, r.counterexample->q,
                                        r.counterexample->t))
            : py::none();
    return out;
  });
  m.def("synthesize_duke",
        [](std::array<int, 4> sizes, std::vector<std::pair<int, int>> pattern) {
          SynthesizedDuke s = SynthesizeDuke(sizes, pattern);
          return py::make_tuple(s.graph, ToPython(PartitionToJson(s.partition)));
        });
  m.def("screen", [](const PrimeGraph& g) {
    return ToPython(ReportToJson(Screen(g)));
  });
  m.def("validate_report", [](const PrimeGraph& g, const py::object& report) {
    return ValidateReport(g, ReportFromJson(FromPython(report)));
  });

  m.def("psl2_degrees", [](std::uint64_t q) {
    return Psl2Degrees(PrimePowerQ::Make(q)).values();
  });
  m.def("psl2_graph", [](std::uint64_t q) {
    return Psl2ClassifiedGraph(PrimePowerQ::Make(q));
  });
  m.def("psl2_crosscheck", [](std::uint64_t q) {
    return Psl2Crosscheck(PrimePowerQ::Make(q));
  });

  m.def("parse_record", [](const std::string& line, bool lax) {
    return ToPython(Json::parse(SerializeRecord(
        ParseRecord(line, lax ? ParseMode::kLax : ParseMode::kStrict))));
  }, py::arg("line"), py::arg("lax") = false);
  m.def("verify_corpus", [](const std::vector<std::string>& lines, bool lax) {
    std::vector<GroupRecord> records;
    for (const auto& line : lines) {
      records.push_back(
          DecodeRecord(line, lax ? ParseMode::kLax : ParseMode::kStrict));
    }
    return ToPython(VerdictReportToJson(VerifyCorpus(records)));
  }, py::arg("lines"), py::arg("lax") = false);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = RunCli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
