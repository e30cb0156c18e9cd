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

#ifndef CHARGRAPH_PRIMES_H_
#define CHARGRAPH_PRIMES_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace chargraph {

using Prime = std::uint64_t;

struct PrimeFactor {
  Prime prime;
  int exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// Prime factorization sorted by ascending prime. Empty for n = 1.
using Factorization = std::vector<PrimeFactor>;

// Deterministic trial division. Throws Error(kInvalidArgument) for n == 0.
Factorization Factorize(std::uint64_t n);

// pi(n): the distinct primes dividing n, ascending.
std::vector<Prime> PrimeSet(std::uint64_t n);

bool IsPrime(std::uint64_t n);

// Returns (p, f) with p^f == q when q is a prime power. Requires q >= 2.
std::optional<std::pair<Prime, int>> PrimePower(std::uint64_t q);

bool IsPowerOfTwo(std::uint64_t n);

// The first `count` primes in ascending order.
std::vector<Prime> FirstPrimes(int count);

}  // namespace chargraph

#endif  // CHARGRAPH_PRIMES_H_
