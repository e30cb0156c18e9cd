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

#include "chargraph/cli.h"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "chargraph/corpus.h"
#include "chargraph/duke.h"
#include "chargraph/errors.h"
#include "chargraph/psl2.h"

namespace chargraph {
namespace {

std::vector<std::uint64_t> ParseDegreeList(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    std::uint64_t value = 0;
    const char* begin = first == std::string::npos ? item.data() : item.data() + first;
    const char* end = first == std::string::npos ? item.data() : item.data() + last + 1;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (begin == end || ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad degree '" + item + "' in --degrees");
    }
    out.push_back(value);
  }
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void EmitDot(const std::optional<std::string>& out_dir, const std::string& stem,
             const std::string& dot) {
  if (!out_dir) return;
  std::filesystem::create_directories(*out_dir);
  WriteFile(std::filesystem::path(*out_dir) / (stem + ".dot"), dot);
}

std::string TrialStem(std::uint64_t trial) {
  std::ostringstream s;
  s << "nonfeasible_" << std::setw(6) << std::setfill('0') << trial;
  return s.str();
}

}  // namespace

double ParseProbability(const std::string& text) {
  double value = 0;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string num = text.substr(0, slash);
      const std::string den = text.substr(slash + 1);
      const double a = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(text);
      const double b = std::stod(den, &used);
      if (used != den.size() || b == 0) throw std::invalid_argument(text);
      value = a / b;
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "bad probability '" + text + "'");
  }
  if (!(value > 0 && value <= 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge probability must lie in (0, 1]");
  }
  return value;
}

FuzzStats Fuzz(const FuzzOptions& options) {
  if (options.k < 4 || options.k > 10) {
    throw Error(ErrorCode::kInvalidArgument, "k must be in 4..10");
  }
  if (!(options.edge_prob > 0 && options.edge_prob <= 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge probability must lie in (0, 1]");
  }
  if (options.out_dir) std::filesystem::create_directories(*options.out_dir);

  const std::vector<Prime> primes = FirstPrimes(options.k);
  std::mt19937_64 rng(options.seed);
  FuzzStats stats;
  stats.seed = options.seed;
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    std::vector<Edge> edges;
    for (int i = 0; i < options.k; ++i) {
      for (int j = i + 1; j < options.k; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < options.edge_prob) edges.emplace_back(primes[i], primes[j]);
      }
    }
    const PrimeGraph g(primes, edges);
    ++stats.graphs_generated;
    const int diameter = Diameter(g);
    ++stats.by_diameter[diameter];
    if (diameter != 3) continue;

    const bool duke = FindDuke(g).has_value();
    const bool co_bipartite = BipartitionOrOddCycle(Complement(g)).bipartite;
    if (duke && !co_bipartite) {
      throw std::logic_error("duke graph with non-bipartite complement");
    }
    if (co_bipartite) ++stats.diam3_complement_bipartite;
    if (duke) {
      ++stats.diam3_duke;
      continue;
    }
    ++stats.diam3_nonduke;
    ++stats.nonfeasible_emitted;
    if (options.out_dir) {
      const std::string stem = TrialStem(trial);
      WriteFile(*options.out_dir / (stem + ".dot"), ToDot(g));
      WriteFile(*options.out_dir / (stem + ".json"), Pretty(ReportToJson(Screen(g))));
    }
  }
  return stats;
}

Json FuzzStatsToJson(const FuzzStats& stats) {
  Json by_diameter = Json::object();
  for (const auto& [d, n] : stats.by_diameter) by_diameter[std::to_string(d)] = n;
  return {{"graphs_generated", stats.graphs_generated},
          {"by_diameter", by_diameter},
          {"diam3_duke", stats.diam3_duke},
          {"diam3_nonduke", stats.diam3_nonduke},
          {"diam3_complement_bipartite", stats.diam3_complement_bipartite},
          {"nonfeasible_emitted", stats.nonfeasible_emitted},
          {"seed", stats.seed}};
}

int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Character degree graph toolkit", "chargraph"};
  app.require_subcommand(1);

  std::string format = "json";
  std::optional<std::string> out_dir;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--out", out_dir, "directory for DOT output");
  };

  std::string degrees;
  auto* analyze = app.add_subcommand("analyze", "degree set -> graph, DOT and screen");
  analyze->add_option("--degrees", degrees, "comma-separated degrees")->required();
  add_common(analyze);

  std::string corpus_path;
  bool strict = false;
  bool lax = false;
  auto* verify = app.add_subcommand("verify", "check a JSONL corpus");
  verify->add_option("corpus", corpus_path, "JSONL file")->required();
  auto* strict_flag = verify->add_flag("--strict", strict, "reject unknown fields (default)");
  verify->add_flag("--lax", lax, "warn on unknown fields")->excludes(strict_flag);

  std::uint64_t q = 0;
  auto* psl2 = app.add_subcommand("psl2", "degrees and graph of PSL2(q)");
  psl2->add_option("--q", q, "prime power >= 4")->required();
  add_common(psl2);

  std::string edges;
  std::string isolated;
  auto* screen = app.add_subcommand("screen", "screen an explicit prime graph");
  screen->add_option("--edges", edges, "edge list p-q,...");
  screen->add_option("--isolated", isolated, "isolated primes p,...");
  add_common(screen);

  int k = 7;
  std::string edge_prob = "1/2";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  auto* fuzz = app.add_subcommand("fuzz", "random graph exploration");
  fuzz->add_option("--k", k, "vertex count (4..10)");
  fuzz->add_option("--edge-prob", edge_prob, "edge probability, e.g. 0.5 or 1/2");
  fuzz->add_option("--trials", trials, "number of graphs");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--out", out_dir, "directory for certificates");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const DegreeSet cd(ParseDegreeList(degrees));
      const PrimeGraph g = BuildGraph(cd);
      const std::string dot = ToDot(g);
      EmitDot(out_dir, "delta", dot);
      bool passed = true;
      Json doc = {{"degrees", cd.values()},
                  {"graph", GraphToJson(g)},
                  {"components", Components(g)},
                  {"diameter", nullptr},
                  {"dot", dot},
                  {"screen", nullptr}};
      if (!g.empty()) {
        const FeasibilityReport report = Screen(g);
        passed = report.passed;
        doc["diameter"] = report.diameter;
        doc["screen"] = ReportToJson(report);
      }
      out << (format == "dot" ? dot : Pretty(doc));
      return passed ? kExitOk : kExitChecksFailed;
    }
    if (verify->parsed()) {
      std::ifstream in(corpus_path);
      if (!in) {
        err << "error: cannot open " << corpus_path << "\n";
        return kExitUsage;
      }
      std::vector<std::string> warnings;
      const auto records =
          ReadCorpus(in, lax ? ParseMode::kLax : ParseMode::kStrict, &warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      const VerdictReport report = VerifyCorpus(records);
      out << Pretty(VerdictReportToJson(report));
      return report.overall_pass ? kExitOk : kExitChecksFailed;
    }
    if (psl2->parsed()) {
      const PrimePowerQ pq = PrimePowerQ::Make(q);
      const PrimeGraph g = Psl2ClassifiedGraph(pq);
      const bool agree = Psl2Crosscheck(pq);
      const std::string dot = ToDot(g);
      EmitDot(out_dir, "psl2_" + std::to_string(q), dot);
      Json doc = {{"q", pq.q},
                  {"p", pq.p},
                  {"f", pq.f},
                  {"degrees", Psl2Degrees(pq).values()},
                  {"graph", GraphToJson(g)},
                  {"components", Components(g)},
                  {"dot", dot},
                  {"crosscheck", agree}};
      out << (format == "dot" ? dot : Pretty(doc));
      return agree ? kExitOk : kExitChecksFailed;
    }
    if (screen->parsed()) {
      const PrimeGraph g = ParseEdgeList(edges, isolated);
      const FeasibilityReport report = Screen(g);
      const std::string dot = ToDot(g);
      EmitDot(out_dir, "screened", dot);
      out << (format == "dot" ? dot : Pretty(ReportToJson(report)));
      return report.passed ? kExitOk : kExitChecksFailed;
    }
    if (fuzz->parsed()) {
      FuzzOptions opts;
      opts.k = k;
      opts.edge_prob = ParseProbability(edge_prob);
      opts.trials = trials;
      opts.seed = seed;
      if (out_dir) opts.out_dir = *out_dir;
      out << Pretty(FuzzStatsToJson(Fuzz(opts)));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chargraph
