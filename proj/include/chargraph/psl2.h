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

#ifndef CHARGRAPH_PSL2_H_
#define CHARGRAPH_PSL2_H_

#include <cstdint>

#include "chargraph/graph.h"
#include "chargraph/primes.h"

namespace chargraph {

// q = p^f with q >= 4.
struct PrimePowerQ {
  std::uint64_t q;
  Prime p;
  int f;

  // Throws Error(kInvalidArgument) if q < 4 or q is not a prime power.
  static PrimePowerQ Make(std::uint64_t q);
};

// cd(PSL2(q)) from the standard closed forms.
DegreeSet Psl2Degrees(const PrimePowerQ& q);

// Delta(PSL2(q)) assembled directly from the prime sets of q-1 and q+1 and
// the case split on the parity of q, without going through any degrees.
PrimeGraph Psl2ClassifiedGraph(const PrimePowerQ& q);

// BuildGraph(Psl2Degrees(q)) == Psl2ClassifiedGraph(q).
bool Psl2Crosscheck(const PrimePowerQ& q);

}  // namespace chargraph

#endif  // CHARGRAPH_PSL2_H_
