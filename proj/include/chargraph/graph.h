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

#ifndef CHARGRAPH_GRAPH_H_
#define CHARGRAPH_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chargraph/primes.h"

namespace chargraph {

// Bit i refers to the i-th vertex of a PrimeGraph in ascending prime order.
using VertexMask = std::uint64_t;
using Edge = std::pair<Prime, Prime>;

// A set of character degrees. Always contains 1; duplicates collapse.
class DegreeSet {
 public:
  // Throws Error(kInvalidArgument) when 0 appears or 1 is missing.
  explicit DegreeSet(std::vector<std::uint64_t> degrees);
  DegreeSet(std::initializer_list<std::uint64_t> degrees)
      : DegreeSet(std::vector<std::uint64_t>(degrees)) {}

  // Ascending, distinct.
  const std::vector<std::uint64_t>& values() const { return degrees_; }
  bool contains(std::uint64_t d) const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  std::vector<std::uint64_t> degrees_;
};

// Simple undirected graph on at most 64 primes. Immutable once built.
//
// Canonical form: vertices sorted ascending and one adjacency bit row per
// vertex, kept symmetric with an empty diagonal. Two graphs compare equal
// exactly when they have the same vertices and the same edges.
class PrimeGraph {
 public:
  static constexpr int kMaxVertices = 64;

  PrimeGraph() = default;

  // Vertices may come in any order; every vertex must be prime and every
  // edge endpoint a listed vertex. Self-loops are rejected.
  PrimeGraph(std::vector<Prime> vertices, std::span<const Edge> edges);
  PrimeGraph(std::vector<Prime> vertices, std::initializer_list<Edge> edges)
      : PrimeGraph(std::move(vertices),
                   std::span<const Edge>(edges.begin(), edges.size())) {}

  // `rows[i]` is the neighbor mask of `vertices[i]`. Vertices must already be
  // sorted and prime; rows must be symmetric and irreflexive.
  static PrimeGraph FromAdjacency(std::vector<Prime> vertices,
                                  std::vector<VertexMask> rows);

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Prime>& vertices() const { return vertices_; }
  Prime vertex(int index) const { return vertices_[index]; }
  VertexMask all_mask() const;

  std::optional<int> IndexOf(Prime p) const;
  bool contains(Prime p) const { return IndexOf(p).has_value(); }
  // Throws Error(kInvalidArgument) if p is not a vertex.
  int RequireIndex(Prime p) const;

  bool AdjacentAt(int i, int j) const { return (rows_[i] >> j) & 1U; }
  bool Adjacent(Prime a, Prime b) const;
  VertexMask neighbors(int index) const { return rows_[index]; }
  int degree(int index) const;

  // Edges (smaller, larger), lexicographically ordered.
  std::vector<Edge> edges() const;
  int edge_count() const;

  std::vector<Prime> PrimesOf(VertexMask mask) const;
  VertexMask MaskOf(std::span<const Prime> primes) const;

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;

 private:
  std::vector<Prime> vertices_;
  std::vector<VertexMask> rows_;
};

// Delta(G): vertices are the primes dividing some degree; p ~ q iff pq
// divides some degree.
PrimeGraph BuildGraph(const DegreeSet& degrees);

PrimeGraph Complement(const PrimeGraph& g);

// Throws Error(kInvalidArgument) if `subset` is not contained in V(g).
PrimeGraph Induced(const PrimeGraph& g, std::span<const Prime> subset);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Prime>> Components(const PrimeGraph& g);

inline constexpr int kUnreachable = -1;

// Breadth-first distances from vertex index `source`; kUnreachable across
// components.
std::vector<int> DistancesFrom(const PrimeGraph& g, int source);

// Shortest-path length, or nullopt if u and v lie in different components.
std::optional<int> Distance(const PrimeGraph& g, Prime u, Prime v);

// Maximum distance over pairs inside a common component. A disconnected
// graph gets the largest component diameter. Throws on an empty graph.
int Diameter(const PrimeGraph& g);

bool IsComplete(const PrimeGraph& g);

// Proof of 2-colorability or of its failure.
struct BipartiteCertificate {
  bool bipartite = true;
  std::map<Prime, int> coloring;   // set when bipartite, values 0 or 1
  std::vector<Prime> odd_cycle;    // set otherwise, cyclic order

  // Checks the certificate against `g` without trusting how it was built.
  bool Validate(const PrimeGraph& g) const;
};

// Breadth-first 2-coloring from each component's smallest vertex (colored
// 0). On the first same-layer edge the two tree paths to their common
// ancestor close an odd cycle.
BipartiteCertificate BipartitionOrOddCycle(const PrimeGraph& g);

// Graphviz text. Vertices ascending, then edges lexicographically.
std::string ToDot(const PrimeGraph& g, std::string_view name = "delta");

// Reads the subset of DOT emitted by ToDot: `N;` vertex statements and
// `A -- B;` edge statements inside one `graph NAME { ... }` block.
PrimeGraph ParseDot(std::string_view text);

// Parses "2-3,3-5" plus an optional isolated list "7,11".
PrimeGraph ParseEdgeList(std::string_view edges, std::string_view isolated = {});

}  // namespace chargraph

#endif  // CHARGRAPH_GRAPH_H_
