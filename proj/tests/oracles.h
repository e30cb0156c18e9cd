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

// Brute-force reference implementations used only by tests. None of these
// call into the algorithms they are compared against; they read the graph
// through PrimeGraph::AdjacentAt only.

#ifndef CHARGRAPH_TESTS_ORACLES_H_
#define CHARGRAPH_TESTS_ORACLES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "chargraph/duke.h"
#include "chargraph/graph.h"

namespace chargraph::oracle {

// Factor by testing every candidate divisor in turn.
inline std::vector<std::pair<std::uint64_t, int>> NaiveFactor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; n > 1; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  return out;
}

// All-pairs shortest paths by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> AllPairs(const PrimeGraph& g) {
  const int n = g.size();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (g.AdjacentAt(i, j)) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  return d;
}

// Tries all 2^n colorings.
inline bool TwoColorable(const PrimeGraph& g) {
  const int n = g.size();
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (g.AdjacentAt(i, j) && ((c >> i) & 1) == ((c >> j) & 1)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Checks the five duke conditions literally for part labels 0..3.
inline bool IsDukeAssignment(const PrimeGraph& g, const std::vector<int>& part) {
  const int n = g.size();
  std::array<int, 4> count{};
  for (int x : part) ++count[x];
  for (int c : count) {
    if (c == 0) return false;
  }
  for (int i = 0; i < n; ++i) {
    bool has_partner = false;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool adj = g.AdjacentAt(i, j);
      const int a = part[i];
      const int b = part[j];
      if (a == 0 && (b == 2 || b == 3) && adj) return false;
      if (a == 3 && (b == 0 || b == 1) && adj) return false;
      if (a <= 1 && b <= 1 && !adj) return false;
      if (a >= 2 && b >= 2 && !adj) return false;
      if ((a == 1 && b == 2) || (a == 2 && b == 1)) has_partner |= adj;
    }
    if ((part[i] == 1 || part[i] == 2) && !has_partner) return false;
  }
  return true;
}

// Enumerates all 4^n ordered assignments and returns the lexicographically
// least duke partition by (rho1, rho2, rho3).
inline std::optional<DukePartition> BruteForceDuke(const PrimeGraph& g) {
  const int n = g.size();
  std::optional<DukePartition> best;
  std::vector<int> part(n, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      part[i] = static_cast<int>(c % 4);
      c /= 4;
    }
    if (!IsDukeAssignment(g, part)) continue;
    DukePartition cand;
    std::array<std::vector<Prime>*, 4> slots{&cand.rho1, &cand.rho2,
                                             &cand.rho3, &cand.rho4};
    for (int i = 0; i < n; ++i) slots[part[i]]->push_back(g.vertex(i));
    if (!best || std::tie(cand.rho1, cand.rho2, cand.rho3) <
                     std::tie(best->rho1, best->rho2, best->rho3)) {
      best = cand;
    }
  }
  return best;
}

// Graph on `primes` whose edges are the set bits of `code` over the pairs
// (i, j), i < j, in lexicographic order.
inline PrimeGraph GraphFromCode(const std::vector<Prime>& primes,
                                std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j, ++bit) {
      if ((code >> bit) & 1) edges.emplace_back(primes[i], primes[j]);
    }
  }
  return PrimeGraph(primes, edges);
}

// Cycle on `primes` in the given order.
inline PrimeGraph Cycle(const std::vector<Prime>& primes) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    edges.emplace_back(primes[i], primes[(i + 1) % primes.size()]);
  }
  return PrimeGraph(primes, edges);
}

inline PrimeGraph Path(const std::vector<Prime>& primes) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    edges.emplace_back(primes[i], primes[i + 1]);
  }
  return PrimeGraph(primes, edges);
}

}  // namespace chargraph::oracle

#endif  // CHARGRAPH_TESTS_ORACLES_H_
