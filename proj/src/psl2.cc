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

#include "chargraph/psl2.h"

#include <algorithm>
#include <string>
#include <vector>

#include "chargraph/errors.h"

namespace chargraph {
namespace {

void AddClique(const std::vector<Prime>& members, std::vector<Edge>* edges) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges->emplace_back(members[i], members[j]);
    }
  }
}

std::vector<Prime> Union(std::vector<Prime> a, const std::vector<Prime>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Prime> WithoutTwo(std::vector<Prime> v) {
  std::erase(v, Prime{2});
  return v;
}

}  // namespace

PrimePowerQ PrimePowerQ::Make(std::uint64_t q) {
  if (q < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "q must be at least 4, got " + std::to_string(q));
  }
  auto pf = PrimePower(q);
  if (!pf) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(q) + " is not a prime power");
  }
  return PrimePowerQ{q, pf->first, pf->second};
}

DegreeSet Psl2Degrees(const PrimePowerQ& pq) {
  const std::uint64_t q = pq.q;
  if (q % 2 == 0) return DegreeSet{1, q - 1, q, q + 1};
  if (q == 5) return DegreeSet{1, 3, 4, 5};
  // (q + eps) / 2 with eps = (-1)^((q-1)/2).
  const std::uint64_t half = ((q - 1) / 2) % 2 == 0 ? (q + 1) / 2 : (q - 1) / 2;
  return DegreeSet{1, half, q - 1, q, q + 1};
}

PrimeGraph Psl2ClassifiedGraph(const PrimePowerQ& pq) {
  const std::uint64_t q = pq.q;
  const std::vector<Prime> below = PrimeSet(q - 1);
  const std::vector<Prime> above = PrimeSet(q + 1);
  std::vector<Edge> edges;
  if (q % 2 == 0) {
    // {2}, pi(q-1), pi(q+1): three complete components.
    AddClique(below, &edges);
    AddClique(above, &edges);
    return PrimeGraph(Union(Union({2}, below), above), edges);
  }
  if (q == 5) return PrimeGraph({2, 3, 5}, {});
  const std::vector<Prime> rest = Union(below, above);
  if (IsPowerOfTwo(q - 1) || IsPowerOfTwo(q + 1)) {
    AddClique(rest, &edges);
  } else {
    const std::vector<Prime> m = WithoutTwo(below);
    const std::vector<Prime> p = WithoutTwo(above);
    AddClique(m, &edges);
    AddClique(p, &edges);
    for (Prime x : rest) {
      if (x != 2) edges.emplace_back(2, x);
    }
  }
  return PrimeGraph(Union({pq.p}, rest), edges);
}

bool Psl2Crosscheck(const PrimePowerQ& q) {
  return BuildGraph(Psl2Degrees(q)) == Psl2ClassifiedGraph(q);
}

}  // namespace chargraph
