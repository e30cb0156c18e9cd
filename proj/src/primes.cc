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

#include "chargraph/primes.h"

#include "chargraph/errors.h"

namespace chargraph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kNotDistance3:
      return "NOT_DISTANCE_3";
    case ErrorCode::kNotAPartition:
      return "NOT_A_PARTITION";
    case ErrorCode::kTooSmall:
      return "TOO_SMALL";
    case ErrorCode::kBadPattern:
      return "BAD_PATTERN";
    case ErrorCode::kMalformed:
      return "MALFORMED";
    case ErrorCode::kInvalid:
      return "INVALID";
    case ErrorCode::kSearchTooLarge:
      return "SEARCH_TOO_LARGE";
  }
  return "UNKNOWN";
}

Factorization Factorize(std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot factorize 0");
  }
  Factorization out;
  // d <= n / d avoids overflow of d * d near 2^64.
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<Prime> PrimeSet(std::uint64_t n) {
  std::vector<Prime> primes;
  for (const auto& [p, e] : Factorize(n)) primes.push_back(p);
  return primes;
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<Prime, int>> PrimePower(std::uint64_t q) {
  if (q < 2) {
    throw Error(ErrorCode::kInvalidArgument, "prime power test needs q >= 2");
  }
  const Factorization f = Factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.front().prime, f.front().exponent);
}

bool IsPowerOfTwo(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<Prime> FirstPrimes(int count) {
  std::vector<Prime> out;
  for (Prime n = 2; static_cast<int>(out.size()) < count; ++n) {
    if (IsPrime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace chargraph
