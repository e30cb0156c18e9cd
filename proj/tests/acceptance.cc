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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "chargraph/cli.h"
#include "chargraph/corpus.h"
#include "chargraph/duke.h"
#include "chargraph/json_io.h"
#include "chargraph/psl2.h"
#include "oracles.h"

namespace chargraph {
namespace {

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << "\n      " << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string messages() const { return messages_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream messages_;
};

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int RunCliCapture(std::vector<std::string> args, std::string* out) {
  std::ostringstream o, e;
  const int code = RunCli(args, o, e);
  if (out) *out = o.str();
  return code;
}

// AC1: both derivations of Delta(PSL2(q)) agree for every prime power
// 4 <= q <= 10^4, and the component structure matches the classification.
void Psl2Sweep(Check& c, std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  int count = 0;
  for (std::uint64_t q = 4; q <= 10000; ++q) {
    if (!PrimePower(q)) continue;
    ++count;
    const PrimePowerQ pq = PrimePowerQ::Make(q);
    const PrimeGraph built = BuildGraph(Psl2Degrees(pq));
    const PrimeGraph classified = Psl2ClassifiedGraph(pq);
    c.Expect(built == classified, "crosscheck q=" + std::to_string(q));
    const auto comps = Components(built);
    if (q % 2 == 0) {
      bool all_complete = true;
      for (const auto& comp : comps) all_complete &= IsComplete(Induced(built, comp));
      c.Expect(comps.size() == 3 && all_complete &&
                   comps.front() == std::vector<Prime>{2},
               "even structure q=" + std::to_string(q));
    } else if (q > 5) {
      const bool pow2 = IsPowerOfTwo(q - 1) || IsPowerOfTwo(q + 1);
      bool ok = comps.size() == 2;
      bool has_singleton_p = false;
      for (const auto& comp : comps) {
        if (comp == std::vector<Prime>{pq.p}) {
          has_singleton_p = true;
        } else {
          ok &= IsComplete(Induced(built, comp)) == pow2;
        }
      }
      c.Expect(ok && has_singleton_p, "odd structure q=" + std::to_string(q));
    }
  }
  const double secs = SecondsSince(start);
  c.Expect(secs < 5.0, "took " + std::to_string(secs) + " s, limit 5 s");
  detail = std::to_string(count) + " prime powers, " + std::to_string(secs) + " s";
}

// AC2: all 2^15 graphs on six labelled vertices.
void ExhaustiveSixVertex(Check& c, std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Prime> primes = {2, 3, 5, 7, 11, 13};
  int duke = 0;
  int bipartite = 0;
  for (std::uint64_t code = 0; code < (1 << 15); ++code) {
    const PrimeGraph g = oracle::GraphFromCode(primes, code);
    const auto found = FindDuke(g);
    const auto brute = oracle::BruteForceDuke(g);
    c.Expect(found == brute, "find_duke mismatch on code " + std::to_string(code));
    duke += found.has_value();
    const BipartiteCertificate cert = BipartitionOrOddCycle(g);
    c.Expect(cert.bipartite == oracle::TwoColorable(g) && cert.Validate(g),
             "bipartite mismatch on code " + std::to_string(code));
    bipartite += cert.bipartite;
  }
  const double secs = SecondsSince(start);
  c.Expect(secs < 60.0, "took " + std::to_string(secs) + " s, limit 60 s");
  detail = "32768 graphs, " + std::to_string(duke) + " duke, " +
           std::to_string(bipartite) + " bipartite, " + std::to_string(secs) + " s";
}

// AC3: 10,000 synthesized duke graphs.
void DukeImpliesBipartiteComplement(Check& c, std::string& detail) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<int, 4> sizes;
    for (int& s : sizes) s = 1 + static_cast<int>(rng() % 3);
    // Random bipartite pattern, then patch any isolated index.
    std::vector<std::pair<int, int>> pattern;
    for (int i = 0; i < sizes[1]; ++i) {
      for (int j = 0; j < sizes[2]; ++j) {
        if (rng() % 2) pattern.emplace_back(i, j);
      }
    }
    for (int i = 0; i < sizes[1]; ++i) {
      bool linked = false;
      for (const auto& e : pattern) linked |= e.first == i;
      if (!linked) pattern.emplace_back(i, static_cast<int>(rng() % sizes[2]));
    }
    for (int j = 0; j < sizes[2]; ++j) {
      bool linked = false;
      for (const auto& e : pattern) linked |= e.second == j;
      if (!linked) pattern.emplace_back(static_cast<int>(rng() % sizes[1]), j);
    }
    const SynthesizedDuke s = SynthesizeDuke(sizes, pattern);
    const std::string tag = "trial " + std::to_string(trial);
    c.Expect(VerifyDuke(s.graph, s.partition).passed, tag + ": verify_duke");
    const FeasibilityReport report = Screen(s.graph);
    c.Expect(report.passed && ValidateReport(s.graph, report), tag + ": screen");

    const BipartiteCertificate cert = BipartitionOrOddCycle(Complement(s.graph));
    std::set<Prime> left(s.partition.rho1.begin(), s.partition.rho1.end());
    left.insert(s.partition.rho2.begin(), s.partition.rho2.end());
    std::set<Prime> zero, one;
    for (const auto& [p, col] : cert.coloring) (col == 0 ? zero : one).insert(p);
    const std::set<Prime> right = [&] {
      std::set<Prime> r(s.partition.rho3.begin(), s.partition.rho3.end());
      r.insert(s.partition.rho4.begin(), s.partition.rho4.end());
      return r;
    }();
    c.Expect(cert.bipartite &&
                 ((zero == left && one == right) || (zero == right && one == left)),
             tag + ": complement coloring classes");
  }
  detail = "10000 synthesized graphs";
}

// AC4: golden negative and golden positive.
void GoldenScreens(Check& c, std::string& detail) {
  const PrimeGraph c7 = oracle::Cycle({2, 3, 5, 7, 11, 13, 17});
  const FeasibilityReport bad = Screen(c7);
  std::set<std::string> codes;
  for (const auto& f : bad.reasons) codes.insert(std::string(ReasonCodeName(f.code)));
  c.Expect(!bad.passed, "C7 must fail");
  c.Expect(codes == std::set<std::string>{"DIAM3_NOT_DUKE",
                                          "DIAM3_COMPLEMENT_NOT_BIPARTITE",
                                          "DIAM3_LEMMA31_FAILS"} &&
               bad.reasons.size() == 3,
           "C7 reason set");
  // Re-validate each certificate after a JSON round trip.
  const FeasibilityReport reread = ReportFromJson(Json::parse(Pretty(ReportToJson(bad))));
  c.Expect(ValidateReport(c7, reread), "C7 certificates re-validate");
  for (const Finding& f : reread.reasons) {
    FeasibilityReport single = reread;
    single.reasons = {f};
    c.Expect(ValidateReport(c7, single),
             "certificate " + std::string(ReasonCodeName(f.code)));
  }

  const PrimeGraph p4 = oracle::Path({2, 3, 5, 7});
  const FeasibilityReport good = Screen(p4);
  c.Expect(good.passed && good.reasons.empty(), "P4 must pass");
  c.Expect(good.witness == WitnessPair{2, 7}, "P4 witnesses (2,7)");
  c.Expect(good.witness_partition ==
               DukePartition{{7}, {5}, {3}, {2}, WitnessPair{2, 7}},
           "P4 witness partition ({7},{5},{3},{2})");
  detail = "C7 fails with 3 certified reasons; P4 passes";
}

// Replaces degree `from` of the named record in JSONL text.
std::string MutateRecord(const std::string& corpus, const std::string& name,
                         std::uint64_t from, std::uint64_t to) {
  std::istringstream in(corpus);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    Json j = Json::parse(line);
    if (j["name"] == name) {
      for (auto& d : j["degrees"]) {
        if (d.get<std::uint64_t>() == from) d = to;
      }
      line = j.dump();
    }
    out << line << "\n";
  }
  return out.str();
}

// AC5: bundled corpus regression plus single-degree mutations.
void BundledCorpus(Check& c, std::string& detail) {
  const std::string path = CHARGRAPH_CORPUS_PATH;
  const std::string corpus = ReadFile(path);
  std::string out;
  const int code = RunCliCapture({"verify", path}, &out);
  const Json report = Json::parse(out);
  c.Expect(code == kExitOk, "bundled corpus exit code " + std::to_string(code));
  c.Expect(report["overall_pass"] == true, "bundled corpus overall_pass");
  c.Expect(report["entries"].size() >= 10, "at least 10 records");
  std::set<std::string> names;
  for (const auto& e : report["entries"]) names.insert(e["name"]);
  for (const char* required : {"PSL(2,4)", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)",
                               "PSL(2,9)", "PSL(2,11)", "PSL(2,13)", "SL(2,3)", "A7"}) {
    c.Expect(names.count(required) == 1, std::string("missing record ") + required);
  }

  const auto dir = std::filesystem::temp_directory_path() / "chargraph_acceptance_corpus";
  std::filesystem::create_directories(dir);
  int mutations = 0;
  auto expect_failure = [&](const std::string& mutated, const std::string& name,
                            const std::string& check) {
    const auto file = dir / "mutated.jsonl";
    std::ofstream(file, std::ios::binary) << mutated;
    std::string mout;
    const int mcode = RunCliCapture({"verify", file.string()}, &mout);
    const Json mreport = Json::parse(mout);
    bool named = false;
    for (const auto& e : mreport["entries"]) {
      if (e["passed"] == false) {
        named = e["name"] == name && e["checks"][check]["status"] == "fail" &&
                !e["checks"][check]["certificate"].is_null();
      }
    }
    c.Expect(mcode == kExitChecksFailed && named,
             "mutation of " + name + " should fail " + check);
    ++mutations;
  };

  // Divisibility: every record with an order, largest degree -> a prime
  // that does not divide the order.
  const auto records = [&] {
    std::istringstream in(corpus);
    return ReadCorpus(in);
  }();
  for (const GroupRecord& r : records) {
    if (!r.order || r.degrees.values().size() < 2) continue;
    Prime p = 2;
    while (*r.order % p == 0 || !IsPrime(p)) ++p;
    expect_failure(MutateRecord(corpus, r.name, r.degrees.values().back(), p),
                   r.name, "K0");
  }

  // Bipartiteness: GL(2,3) degree 4 -> 5 leaves three isolated primes, so
  // the complement of the graph is a triangle.
  const std::string broken = MutateRecord(corpus, "GL(2,3)", 4, 5);
  expect_failure(broken, "GL(2,3)", "K3");
  {
    std::istringstream in(broken);
    const auto mutated = ReadCorpus(in);
    for (const auto& r : mutated) {
      if (r.name != "GL(2,3)") continue;
      const RecordVerdict v = VerifyRecord(r, 0);
      BipartiteCertificate cert;
      cert.bipartite = false;
      cert.odd_cycle = v.checks.at("K3").certificate["odd_cycle"].get<std::vector<Prime>>();
      c.Expect(cert.Validate(Complement(BuildGraph(r.degrees))),
               "K3 certificate re-validates");
    }
  }
  detail = std::to_string(records.size()) + " records pass; " +
           std::to_string(mutations) + " mutations flip the exit code";
}

std::map<std::string, std::string> DirectoryContents(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  if (!std::filesystem::exists(dir)) return files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    files[entry.path().filename().string()] = ReadFile(entry.path());
  }
  return files;
}

// AC6: fuzz determinism and certificate soundness.
void FuzzDeterminism(Check& c, std::string& detail) {
  const auto base = std::filesystem::temp_directory_path() / "chargraph_acceptance_fuzz";
  std::filesystem::remove_all(base);
  auto run = [&](const std::string& tag, const std::vector<std::string>& params) {
    std::vector<std::string> args = {"fuzz", "--out", (base / tag).string()};
    args.insert(args.end(), params.begin(), params.end());
    std::string out;
    const int code = RunCliCapture(args, &out);
    c.Expect(code == kExitOk, "fuzz exit code");
    return out;
  };
  const std::vector<std::string> params = {"--k", "7", "--edge-prob", "1/2",
                                           "--trials", "1000", "--seed", "42"};
  const std::string first = run("a", params);
  const std::string second = run("b", params);
  c.Expect(first == second, "stats differ between identical runs");
  const auto files_a = DirectoryContents(base / "a");
  const auto files_b = DirectoryContents(base / "b");
  c.Expect(files_a == files_b, "emitted files differ between identical runs");

  const Json stats = Json::parse(first);
  const std::uint64_t diam3 =
      stats["by_diameter"].contains("3") ? stats["by_diameter"]["3"].get<std::uint64_t>() : 0;
  c.Expect(stats["diam3_duke"].get<std::uint64_t>() +
                   stats["diam3_nonduke"].get<std::uint64_t>() == diam3,
           "diam3_duke + diam3_nonduke != by_diameter[3]");
  c.Expect(stats["nonfeasible_emitted"].get<std::uint64_t>() * 2 == files_a.size(),
           "one DOT and one JSON per emitted graph");

  int checked = 0;
  for (const auto& [name, text] : files_a) {
    if (!name.ends_with(".dot")) continue;
    const std::string stem = name.substr(0, name.size() - 4);
    const PrimeGraph g = ParseDot(ReadFile(base / "a" / name));
    const Json stored = Json::parse(ReadFile(base / "a" / (stem + ".json")));
    const FeasibilityReport report = ReportFromJson(stored);
    c.Expect(!report.passed && ValidateReport(g, report), stem + " certificate");
    c.Expect(ReportToJson(Screen(g)) == stored, stem + " report reproducible");
    c.Expect(Diameter(g) == 3 && !oracle::BruteForceDuke(g).has_value(),
             stem + " brute-force duke re-check");
    ++checked;
  }

  // The count invariant across other parameter choices.
  int runs = 1;
  for (const auto& extra : std::vector<std::vector<std::string>>{
           {"--k", "4", "--edge-prob", "0.5", "--trials", "300", "--seed", "1"},
           {"--k", "8", "--edge-prob", "0.35", "--trials", "300", "--seed", "7"},
           {"--k", "10", "--edge-prob", "0.6", "--trials", "200", "--seed", "123"}}) {
    const Json s = Json::parse(run("extra" + std::to_string(runs), extra));
    const std::uint64_t d3 =
        s["by_diameter"].contains("3") ? s["by_diameter"]["3"].get<std::uint64_t>() : 0;
    c.Expect(s["diam3_duke"].get<std::uint64_t>() + s["diam3_nonduke"].get<std::uint64_t>() == d3,
             "count invariant, run " + std::to_string(runs));
    ++runs;
  }
  detail = std::to_string(checked) + " certificates re-validated from disk; diameter-3 graphs: " +
           std::to_string(diam3) + " (" + std::to_string(stats["diam3_duke"].get<int>()) + " duke)";
}

}  // namespace
}  // namespace chargraph

int main() {
  using chargraph::Check;
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Check&, std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "PSL2 cross-check sweep, q <= 10^4", chargraph::Psl2Sweep},
      {"AC2", "exhaustive six-vertex oracle agreement", chargraph::ExhaustiveSixVertex},
      {"AC3", "duke implies bipartite complement", chargraph::DukeImpliesBipartiteComplement},
      {"AC4", "golden screens: C7 fails, P4 passes", chargraph::GoldenScreens},
      {"AC5", "bundled corpus regression and mutations", chargraph::BundledCorpus},
      {"AC6", "fuzz determinism and certificate soundness", chargraph::FuzzDeterminism},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    std::string detail;
    try {
      criterion.run(check, detail);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "[PASS] " : "[FAIL] ") << criterion.id << " "
              << criterion.title << " (" << detail << ")" << check.messages()
              << std::endl;
    failed += !check.ok();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
