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

#ifndef CHARGRAPH_DUKE_H_
#define CHARGRAPH_DUKE_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chargraph/graph.h"

namespace chargraph {

// Two primes at distance exactly 3.
struct WitnessPair {
  Prime p;
  Prime q;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// Ordered split of the vertex set into four sorted parts. When a witness is
// attached, q lies in rho1 and p in rho4.
struct DukePartition {
  std::vector<Prime> rho1;
  std::vector<Prime> rho2;
  std::vector<Prime> rho3;
  std::vector<Prime> rho4;
  std::optional<WitnessPair> witness;

  // Throws Error(kNotAPartition) when a part is empty, two parts share a
  // vertex, or the witness sits in the wrong part.
  void CheckInvariants() const;

  friend bool operator==(const DukePartition&, const DukePartition&) = default;
};

// Parts from breadth-first distances to the witnesses:
//   rho1 = {x : d(x,p) = 3}, rho2 = {x : d(x,p) = 2},
//   rho3 = {x : d(x,q) = 2}, rho4 = {x : d(x,q) = 3}.
// Throws Error(kNotDistance3) if d(p,q) != 3 and Error(kNotAPartition),
// carrying the offending vertex, if the four sets overlap or miss a vertex.
DukePartition WitnessPartition(const PrimeGraph& g, Prime p, Prime q);

enum class DukeCondition {
  kRho1IsolatedFromRho34 = 1,  // C1
  kRho4IsolatedFromRho12 = 2,  // C2
  kRho2Rho3Linked = 3,         // C3
  kRho12Complete = 4,          // C4
  kRho34Complete = 5,          // C5
};

std::string_view DukeConditionName(DukeCondition c);

// One failed condition. C1/C2 carry an offending edge, C4/C5 a missing
// edge, C3 a single vertex without a partner (second is empty).
struct DukeViolation {
  DukeCondition condition;
  Prime first;
  std::optional<Prime> second;

  friend bool operator==(const DukeViolation&, const DukeViolation&) = default;
};

struct DukeVerdict {
  bool passed = true;
  std::vector<DukeViolation> violations;  // at most one per condition
};

// Throws Error(kNotAPartition) unless the parts are nonempty, disjoint and
// cover V(g) exactly.
DukeVerdict VerifyDuke(const PrimeGraph& g, const DukePartition& partition);

// Lexicographically least (by rho1, then rho2, then rho3) partition that
// passes VerifyDuke, or nullopt when none exists. Throws Error(kTooSmall)
// below four vertices.
std::optional<DukePartition> FindDuke(const PrimeGraph& g);

// Why FindDuke came back empty. Each kind is checkable from the graph alone.
struct NonDukeCertificate {
  enum class Kind {
    kComplementOddCycle,     // odd_cycle lives in the complement
    kDisconnected,           // parts = components of g
    kComplementDisconnected, // parts = components of the complement
    kOrientationsExhausted,  // parts = the two complement color classes
  };
  Kind kind;
  std::vector<Prime> odd_cycle;
  std::vector<std::vector<Prime>> parts;
};

std::string_view NonDukeKindName(NonDukeCertificate::Kind kind);

// Requires FindDuke(g) to be empty.
NonDukeCertificate ExplainNonDuke(const PrimeGraph& g);
bool ValidateNonDuke(const PrimeGraph& g, const NonDukeCertificate& cert);

struct DominationCounterexample {
  Prime p;
  Prime q;
  Prime t;  // adjacent to neither p nor q

  friend bool operator==(const DominationCounterexample&,
                         const DominationCounterexample&) = default;
};

struct DominationResult {
  bool holds = true;
  std::optional<DominationCounterexample> counterexample;
};

// For every pair p < q at distance 3, every other vertex must be adjacent to
// p or to q. Reports the first violation in (p, q, t) ascending order.
DominationResult CheckDistance3Domination(const PrimeGraph& g);

struct SynthesizedDuke {
  PrimeGraph graph;
  DukePartition partition;
};

// Builds the duke graph on the first a+b+c+d primes (assigned to rho1..rho4
// in order) whose only cross edges are `pattern`, given as (rho2 index,
// rho3 index) pairs. Throws Error(kBadPattern) if the pattern is empty,
// out of range or leaves a rho2/rho3 vertex without a partner.
SynthesizedDuke SynthesizeDuke(std::array<int, 4> sizes,
                               std::span<const std::pair<int, int>> pattern);

enum class ReasonCode {
  kDiameterExceeds3,
  kDiam3NotDuke,
  kDiam3ComplementNotBipartite,
  kDiam3Undominated,
};

std::string_view ReasonCodeName(ReasonCode code);

struct Finding {
  ReasonCode code;
  // kDiameterExceeds3: a pair realizing the diameter.
  std::optional<std::pair<Prime, Prime>> far_pair;
  int far_distance = 0;
  // kDiam3NotDuke.
  std::optional<NonDukeCertificate> non_duke;
  // kDiam3ComplementNotBipartite: odd cycle in the complement.
  std::vector<Prime> complement_odd_cycle;
  // kDiam3Undominated.
  std::optional<DominationCounterexample> undominated;
};

struct FeasibilityReport {
  bool passed = true;
  int diameter = 0;
  std::vector<Finding> reasons;
  // Diameter-3 inputs only.
  std::optional<WitnessPair> witness;
  std::optional<DukePartition> witness_partition;
  std::optional<Prime> witness_partition_conflict;
  std::optional<DukePartition> duke_partition;
};

// Necessary conditions for a character graph: diameter at most 3 and, at
// diameter 3, a duke partition, a bipartite complement and domination of
// every distance-3 pair. All diameter-3 checks run; reasons accumulate.
// Throws Error(kInvalidArgument) on an empty graph.
FeasibilityReport Screen(const PrimeGraph& g);

// Re-checks every certificate in `report` directly against `g`.
bool ValidateReport(const PrimeGraph& g, const FeasibilityReport& report);

}  // namespace chargraph

#endif  // CHARGRAPH_DUKE_H_
