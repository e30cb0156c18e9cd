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

#include "chargraph/duke.h"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>

#include "chargraph/errors.h"

namespace chargraph {
namespace {

VertexMask Bit(int i) { return VertexMask{1} << i; }

int LowestBit(VertexMask m) { return std::countr_zero(m); }

struct PartMasks {
  VertexMask r1 = 0, r2 = 0, r3 = 0, r4 = 0;
};

// Validates that the partition covers V(g) exactly and returns bit masks.
PartMasks MasksFor(const PrimeGraph& g, const DukePartition& part) {
  part.CheckInvariants();
  auto mask_of = [&](const std::vector<Prime>& ps) {
    VertexMask m = 0;
    for (Prime p : ps) {
      auto i = g.IndexOf(p);
      if (!i) {
        throw Error(ErrorCode::kNotAPartition,
                    std::to_string(p) + " is not a vertex of the graph", p);
      }
      m |= Bit(*i);
    }
    return m;
  };
  PartMasks m{mask_of(part.rho1), mask_of(part.rho2), mask_of(part.rho3),
              mask_of(part.rho4)};
  const VertexMask missing = g.all_mask() & ~(m.r1 | m.r2 | m.r3 | m.r4);
  if (missing != 0) {
    const Prime v = g.vertex(LowestBit(missing));
    throw Error(ErrorCode::kNotAPartition,
                std::to_string(v) + " is in no part", v);
  }
  return m;
}

// First pair i < j inside `mask` that is not adjacent.
std::optional<std::pair<int, int>> MissingEdge(const PrimeGraph& g,
                                               VertexMask mask) {
  for (VertexMask a = mask; a != 0; a &= a - 1) {
    const int i = LowestBit(a);
    const VertexMask later = mask & ~((Bit(i) << 1) - 1);
    const VertexMask gap = later & ~g.neighbors(i);
    if (gap != 0) return std::make_pair(i, LowestBit(gap));
  }
  return std::nullopt;
}

DukePartition PartitionFromMasks(const PrimeGraph& g, const PartMasks& m) {
  return DukePartition{g.PrimesOf(m.r1), g.PrimesOf(m.r2), g.PrimesOf(m.r3),
                       g.PrimesOf(m.r4), std::nullopt};
}

// Given a clique cover (a, b) of g, the only candidate split: a vertex of
// `a` with a neighbor in `b` cannot sit in rho1 and one without cannot
// satisfy the rho2 linkage, and symmetrically for `b`.
PartMasks ForcedParts(const PrimeGraph& g, VertexMask a, VertexMask b) {
  PartMasks m;
  for (VertexMask x = a; x != 0; x &= x - 1) {
    const int i = LowestBit(x);
    ((g.neighbors(i) & b) == 0 ? m.r1 : m.r2) |= Bit(i);
  }
  for (VertexMask x = b; x != 0; x &= x - 1) {
    const int i = LowestBit(x);
    ((g.neighbors(i) & a) == 0 ? m.r4 : m.r3) |= Bit(i);
  }
  return m;
}

bool AllNonEmpty(const PartMasks& m) {
  return m.r1 != 0 && m.r2 != 0 && m.r3 != 0 && m.r4 != 0;
}

bool IsVertexPartition(const PrimeGraph& g,
                       const std::vector<std::vector<Prime>>& parts,
                       std::vector<VertexMask>* masks) {
  VertexMask seen = 0;
  for (const auto& part : parts) {
    VertexMask m = 0;
    for (Prime p : part) {
      auto i = g.IndexOf(p);
      if (!i || (seen & Bit(*i)) != 0) return false;
      seen |= Bit(*i);
      m |= Bit(*i);
    }
    if (m == 0) return false;
    masks->push_back(m);
  }
  return seen == g.all_mask();
}

// Parts are nonempty, cover V(g) and no edge of g crosses between them.
bool IsSeparation(const PrimeGraph& g,
                  const std::vector<std::vector<Prime>>& parts) {
  std::vector<VertexMask> masks;
  if (parts.size() < 2 || !IsVertexPartition(g, parts, &masks)) return false;
  for (VertexMask m : masks) {
    for (VertexMask x = m; x != 0; x &= x - 1) {
      if ((g.neighbors(LowestBit(x)) & ~m) != 0) return false;
    }
  }
  return true;
}

auto LexKey(const DukePartition& p) { return std::tie(p.rho1, p.rho2, p.rho3); }

}  // namespace

void DukePartition::CheckInvariants() const {
  const std::vector<const std::vector<Prime>*> parts{&rho1, &rho2, &rho3,
                                                     &rho4};
  std::vector<Prime> all;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k]->empty()) {
      throw Error(ErrorCode::kNotAPartition,
                  "part rho" + std::to_string(k + 1) + " is empty");
    }
    all.insert(all.end(), parts[k]->begin(), parts[k]->end());
  }
  std::sort(all.begin(), all.end());
  if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end()) {
    throw Error(ErrorCode::kNotAPartition,
                std::to_string(*it) + " appears in two parts", *it);
  }
  if (witness) {
    auto has = [](const std::vector<Prime>& v, Prime x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    if (!has(rho1, witness->q) || !has(rho4, witness->p)) {
      throw Error(ErrorCode::kNotAPartition,
                  "witness q must lie in rho1 and p in rho4");
    }
  }
}

DukePartition WitnessPartition(const PrimeGraph& g, Prime p, Prime q) {
  const int ip = g.RequireIndex(p);
  const int iq = g.RequireIndex(q);
  const std::vector<int> from_p = DistancesFrom(g, ip);
  const std::vector<int> from_q = DistancesFrom(g, iq);
  if (from_p[iq] != 3) {
    throw Error(ErrorCode::kNotDistance3,
                "d(" + std::to_string(p) + "," + std::to_string(q) +
                    ") is not 3");
  }
  PartMasks m;
  for (int i = 0; i < g.size(); ++i) {
    int hits = 0;
    if (from_p[i] == 3) m.r1 |= Bit(i), ++hits;
    if (from_p[i] == 2) m.r2 |= Bit(i), ++hits;
    if (from_q[i] == 2) m.r3 |= Bit(i), ++hits;
    if (from_q[i] == 3) m.r4 |= Bit(i), ++hits;
    if (hits != 1) {
      const Prime v = g.vertex(i);
      throw Error(ErrorCode::kNotAPartition,
                  std::to_string(v) +
                      (hits == 0 ? " falls in no part" : " falls in two parts"),
                  v);
    }
  }
  DukePartition out = PartitionFromMasks(g, m);
  out.witness = WitnessPair{p, q};
  return out;
}

std::string_view DukeConditionName(DukeCondition c) {
  switch (c) {
    case DukeCondition::kRho1IsolatedFromRho34:
      return "C1";
    case DukeCondition::kRho4IsolatedFromRho12:
      return "C2";
    case DukeCondition::kRho2Rho3Linked:
      return "C3";
    case DukeCondition::kRho12Complete:
      return "C4";
    case DukeCondition::kRho34Complete:
      return "C5";
  }
  return "?";
}

DukeVerdict VerifyDuke(const PrimeGraph& g, const DukePartition& partition) {
  const PartMasks m = MasksFor(g, partition);
  DukeVerdict verdict;
  auto fail = [&](DukeCondition c, int a, std::optional<int> b) {
    verdict.passed = false;
    verdict.violations.push_back(
        {c, g.vertex(a),
         b ? std::optional<Prime>(g.vertex(*b)) : std::nullopt});
  };
  auto first_cross_edge = [&](VertexMask from, VertexMask to)
      -> std::optional<std::pair<int, int>> {
    for (VertexMask x = from; x != 0; x &= x - 1) {
      const int i = LowestBit(x);
      if (VertexMask hit = g.neighbors(i) & to; hit != 0) {
        return std::make_pair(i, LowestBit(hit));
      }
    }
    return std::nullopt;
  };
  if (auto e = first_cross_edge(m.r1, m.r3 | m.r4)) {
    fail(DukeCondition::kRho1IsolatedFromRho34, e->first, e->second);
  }
  if (auto e = first_cross_edge(m.r4, m.r1 | m.r2)) {
    fail(DukeCondition::kRho4IsolatedFromRho12, e->first, e->second);
  }
  std::optional<int> lonely;
  for (VertexMask x = m.r2; x != 0 && !lonely; x &= x - 1) {
    if ((g.neighbors(LowestBit(x)) & m.r3) == 0) lonely = LowestBit(x);
  }
  for (VertexMask x = m.r3; x != 0 && !lonely; x &= x - 1) {
    if ((g.neighbors(LowestBit(x)) & m.r2) == 0) lonely = LowestBit(x);
  }
  if (lonely) fail(DukeCondition::kRho2Rho3Linked, *lonely, std::nullopt);
  if (auto gap = MissingEdge(g, m.r1 | m.r2)) {
    fail(DukeCondition::kRho12Complete, gap->first, gap->second);
  }
  if (auto gap = MissingEdge(g, m.r3 | m.r4)) {
    fail(DukeCondition::kRho34Complete, gap->first, gap->second);
  }
  return verdict;
}

// A duke partition makes rho1 u rho2 and rho3 u rho4 cliques, i.e. a proper
// 2-coloring of the complement. Any q in rho1 is complement-adjacent to all
// of rho3 u rho4 and any p in rho4 to all of rho1 u rho2, so the complement
// is connected and its coloring is unique up to swapping the classes. That
// leaves two clique covers to examine, each with forced parts.
std::optional<DukePartition> FindDuke(const PrimeGraph& g) {
  if (g.size() < 4) {
    throw Error(ErrorCode::kTooSmall, "a duke partition needs 4 vertices");
  }
  const PrimeGraph co = Complement(g);
  const BipartiteCertificate cert = BipartitionOrOddCycle(co);
  if (!cert.bipartite || Components(co).size() != 1) return std::nullopt;
  VertexMask color0 = 0;
  for (const auto& [p, c] : cert.coloring) {
    if (c == 0) color0 |= Bit(g.RequireIndex(p));
  }
  const VertexMask color1 = g.all_mask() & ~color0;
  std::optional<DukePartition> best;
  for (const auto& [a, b] : {std::pair{color0, color1}, {color1, color0}}) {
    const PartMasks m = ForcedParts(g, a, b);
    if (!AllNonEmpty(m)) continue;
    DukePartition candidate = PartitionFromMasks(g, m);
    if (!VerifyDuke(g, candidate).passed) continue;
    if (!best || LexKey(candidate) < LexKey(*best)) best = std::move(candidate);
  }
  return best;
}

std::string_view NonDukeKindName(NonDukeCertificate::Kind kind) {
  switch (kind) {
    case NonDukeCertificate::Kind::kComplementOddCycle:
      return "complement_odd_cycle";
    case NonDukeCertificate::Kind::kDisconnected:
      return "disconnected";
    case NonDukeCertificate::Kind::kComplementDisconnected:
      return "complement_disconnected";
    case NonDukeCertificate::Kind::kOrientationsExhausted:
      return "orientations_exhausted";
  }
  return "?";
}

NonDukeCertificate ExplainNonDuke(const PrimeGraph& g) {
  if (FindDuke(g)) {
    throw Error(ErrorCode::kInvalidArgument, "graph has a duke partition");
  }
  const PrimeGraph co = Complement(g);
  BipartiteCertificate cert = BipartitionOrOddCycle(co);
  if (!cert.bipartite) {
    return {NonDukeCertificate::Kind::kComplementOddCycle,
            std::move(cert.odd_cycle), {}};
  }
  if (auto comps = Components(g); comps.size() > 1) {
    return {NonDukeCertificate::Kind::kDisconnected, {}, std::move(comps)};
  }
  if (auto comps = Components(co); comps.size() > 1) {
    return {NonDukeCertificate::Kind::kComplementDisconnected, {},
            std::move(comps)};
  }
  std::vector<Prime> zero, one;
  for (const auto& [p, c] : cert.coloring) (c == 0 ? zero : one).push_back(p);
  return {NonDukeCertificate::Kind::kOrientationsExhausted, {},
          {std::move(zero), std::move(one)}};
}

bool ValidateNonDuke(const PrimeGraph& g, const NonDukeCertificate& cert) {
  const PrimeGraph co = Complement(g);
  switch (cert.kind) {
    case NonDukeCertificate::Kind::kComplementOddCycle: {
      BipartiteCertificate odd;
      odd.bipartite = false;
      odd.odd_cycle = cert.odd_cycle;
      return odd.Validate(co);
    }
    case NonDukeCertificate::Kind::kDisconnected:
      return IsSeparation(g, cert.parts);
    case NonDukeCertificate::Kind::kComplementDisconnected:
      return IsSeparation(co, cert.parts);
    case NonDukeCertificate::Kind::kOrientationsExhausted: {
      std::vector<VertexMask> masks;
      if (cert.parts.size() != 2 || !IsVertexPartition(g, cert.parts, &masks)) {
        return false;
      }
      // Both classes are cliques of g and the complement is connected, so
      // this is the only clique cover up to order.
      for (VertexMask m : masks) {
        if (MissingEdge(g, m)) return false;
      }
      if (Components(co).size() != 1 || Components(g).size() != 1) {
        return false;
      }
      return !AllNonEmpty(ForcedParts(g, masks[0], masks[1])) &&
             !AllNonEmpty(ForcedParts(g, masks[1], masks[0]));
    }
  }
  return false;
}

DominationResult CheckDistance3Domination(const PrimeGraph& g) {
  for (int i = 0; i < g.size(); ++i) {
    const std::vector<int> dist = DistancesFrom(g, i);
    for (int j = i + 1; j < g.size(); ++j) {
      if (dist[j] != 3) continue;
      const VertexMask undominated =
          g.all_mask() & ~(g.neighbors(i) | g.neighbors(j) | Bit(i) | Bit(j));
      if (undominated != 0) {
        return {false, DominationCounterexample{g.vertex(i), g.vertex(j),
                                                g.vertex(LowestBit(undominated))}};
      }
    }
  }
  return {};
}

SynthesizedDuke SynthesizeDuke(std::array<int, 4> sizes,
                               std::span<const std::pair<int, int>> pattern) {
  for (int s : sizes) {
    if (s < 1) throw Error(ErrorCode::kBadPattern, "every part needs a vertex");
  }
  const int n = sizes[0] + sizes[1] + sizes[2] + sizes[3];
  if (n > PrimeGraph::kMaxVertices) {
    throw Error(ErrorCode::kBadPattern, "too many vertices");
  }
  if (pattern.empty()) {
    throw Error(ErrorCode::kBadPattern, "no rho2-rho3 edges");
  }
  const int off2 = sizes[0];
  const int off3 = off2 + sizes[1];
  const int off4 = off3 + sizes[2];
  std::vector<bool> linked2(sizes[1]), linked3(sizes[2]);
  for (const auto& [i, j] : pattern) {
    if (i < 0 || i >= sizes[1] || j < 0 || j >= sizes[2]) {
      throw Error(ErrorCode::kBadPattern, "pattern index out of range");
    }
    linked2[i] = linked3[j] = true;
  }
  if (std::find(linked2.begin(), linked2.end(), false) != linked2.end() ||
      std::find(linked3.begin(), linked3.end(), false) != linked3.end()) {
    throw Error(ErrorCode::kBadPattern,
                "every rho2 and rho3 vertex needs a cross edge");
  }
  std::vector<VertexMask> rows(n, 0);
  auto connect = [&](int a, int b) {
    rows[a] |= Bit(b);
    rows[b] |= Bit(a);
  };
  for (int a = 0; a < off3; ++a) {
    for (int b = a + 1; b < off3; ++b) connect(a, b);
  }
  for (int a = off3; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) connect(a, b);
  }
  for (const auto& [i, j] : pattern) connect(off2 + i, off3 + j);

  PrimeGraph g = PrimeGraph::FromAdjacency(FirstPrimes(n), std::move(rows));
  PartMasks m;
  m.r1 = Bit(off2) - 1;
  m.r2 = (Bit(off3) - 1) & ~m.r1;
  m.r3 = (Bit(off4) - 1) & ~(m.r1 | m.r2);
  m.r4 = g.all_mask() & ~(m.r1 | m.r2 | m.r3);
  DukePartition part = PartitionFromMasks(g, m);
  part.witness = WitnessPair{part.rho4.front(), part.rho1.front()};
  return {std::move(g), std::move(part)};
}

std::string_view ReasonCodeName(ReasonCode code) {
  switch (code) {
    case ReasonCode::kDiameterExceeds3:
      return "DIAMETER_EXCEEDS_3";
    case ReasonCode::kDiam3NotDuke:
      return "DIAM3_NOT_DUKE";
    case ReasonCode::kDiam3ComplementNotBipartite:
      return "DIAM3_COMPLEMENT_NOT_BIPARTITE";
    case ReasonCode::kDiam3Undominated:
      return "DIAM3_LEMMA31_FAILS";
  }
  return "?";
}

FeasibilityReport Screen(const PrimeGraph& g) {
  FeasibilityReport report;
  report.diameter = Diameter(g);
  if (report.diameter > 3) {
    Finding f;
    f.code = ReasonCode::kDiameterExceeds3;
    f.far_distance = report.diameter;
    for (int i = 0; i < g.size() && !f.far_pair; ++i) {
      const std::vector<int> dist = DistancesFrom(g, i);
      for (int j = i + 1; j < g.size(); ++j) {
        if (dist[j] == report.diameter) {
          f.far_pair = std::make_pair(g.vertex(i), g.vertex(j));
          break;
        }
      }
    }
    report.reasons.push_back(std::move(f));
  } else if (report.diameter == 3) {
    for (int i = 0; i < g.size() && !report.witness; ++i) {
      const std::vector<int> dist = DistancesFrom(g, i);
      for (int j = i + 1; j < g.size(); ++j) {
        if (dist[j] == 3) {
          report.witness = WitnessPair{g.vertex(i), g.vertex(j)};
          break;
        }
      }
    }
    try {
      report.witness_partition =
          WitnessPartition(g, report.witness->p, report.witness->q);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotAPartition) throw;
      report.witness_partition_conflict = e.vertex();
    }
    report.duke_partition = FindDuke(g);
    if (!report.duke_partition) {
      Finding f;
      f.code = ReasonCode::kDiam3NotDuke;
      f.non_duke = ExplainNonDuke(g);
      report.reasons.push_back(std::move(f));
    }
    BipartiteCertificate co = BipartitionOrOddCycle(Complement(g));
    if (!co.bipartite) {
      Finding f;
      f.code = ReasonCode::kDiam3ComplementNotBipartite;
      f.complement_odd_cycle = std::move(co.odd_cycle);
      report.reasons.push_back(std::move(f));
    }
    if (DominationResult dom = CheckDistance3Domination(g); !dom.holds) {
      Finding f;
      f.code = ReasonCode::kDiam3Undominated;
      f.undominated = dom.counterexample;
      report.reasons.push_back(std::move(f));
    }
  }
  report.passed = report.reasons.empty();
  return report;
}

bool ValidateReport(const PrimeGraph& g, const FeasibilityReport& report) {
  if (g.empty() || report.passed != report.reasons.empty() ||
      report.diameter != Diameter(g)) {
    return false;
  }
  for (const Finding& f : report.reasons) {
    switch (f.code) {
      case ReasonCode::kDiameterExceeds3: {
        if (!f.far_pair || f.far_distance <= 3) return false;
        auto d = Distance(g, f.far_pair->first, f.far_pair->second);
        if (!d || *d != f.far_distance) return false;
        break;
      }
      case ReasonCode::kDiam3NotDuke:
        if (report.diameter != 3 || !f.non_duke ||
            !ValidateNonDuke(g, *f.non_duke)) {
          return false;
        }
        break;
      case ReasonCode::kDiam3ComplementNotBipartite: {
        BipartiteCertificate odd;
        odd.bipartite = false;
        odd.odd_cycle = f.complement_odd_cycle;
        if (report.diameter != 3 || !odd.Validate(Complement(g))) return false;
        break;
      }
      case ReasonCode::kDiam3Undominated: {
        if (report.diameter != 3 || !f.undominated) return false;
        const auto& [p, q, t] = *f.undominated;
        if (!g.contains(p) || !g.contains(q) || !g.contains(t) || t == p ||
            t == q) {
          return false;
        }
        auto d = Distance(g, p, q);
        if (!d || *d != 3 || g.Adjacent(t, p) || g.Adjacent(t, q)) {
          return false;
        }
        break;
      }
    }
  }
  if (report.duke_partition && !VerifyDuke(g, *report.duke_partition).passed) {
    return false;
  }
  if (report.witness_partition) {
    if (!report.witness || report.witness_partition->witness != report.witness) {
      return false;
    }
    try {
      MasksFor(g, *report.witness_partition);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace chargraph
