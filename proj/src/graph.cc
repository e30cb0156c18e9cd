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

#include "chargraph/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>

#include "chargraph/errors.h"

namespace chargraph {
namespace {

VertexMask Bit(int i) { return VertexMask{1} << i; }

template <typename Fn>
void ForEachBit(VertexMask mask, Fn fn) {
  while (mask != 0) {
    fn(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Prime ParsePrimeToken(std::string_view token) {
  token = Trim(token);
  Prime value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected a prime, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

DegreeSet::DegreeSet(std::vector<std::uint64_t> degrees)
    : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end());
  degrees_.erase(std::unique(degrees_.begin(), degrees_.end()),
                 degrees_.end());
  if (!degrees_.empty() && degrees_.front() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "character degrees must be >= 1");
  }
  if (degrees_.empty() || degrees_.front() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree set must contain the trivial degree 1");
  }
}

bool DegreeSet::contains(std::uint64_t d) const {
  return std::binary_search(degrees_.begin(), degrees_.end(), d);
}

PrimeGraph::PrimeGraph(std::vector<Prime> vertices,
                       std::span<const Edge> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vertex");
  }
  if (size() > kMaxVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "at most 64 vertices are supported");
  }
  for (Prime p : vertices_) {
    if (!IsPrime(p)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::to_string(p) + " is not prime", p);
    }
  }
  rows_.assign(vertices_.size(), 0);
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at " + std::to_string(a), a);
    }
    const int i = RequireIndex(a);
    const int j = RequireIndex(b);
    rows_[i] |= Bit(j);
    rows_[j] |= Bit(i);
  }
}

PrimeGraph PrimeGraph::FromAdjacency(std::vector<Prime> vertices,
                                     std::vector<VertexMask> rows) {
  if (vertices.size() != rows.size()) {
    throw Error(ErrorCode::kInvalidArgument, "row count mismatch");
  }
  PrimeGraph g(std::move(vertices), std::span<const Edge>{});
  if (!std::is_sorted(g.vertices_.begin(), g.vertices_.end())) {
    throw Error(ErrorCode::kInvalidArgument, "vertices must be sorted");
  }
  const VertexMask all = g.all_mask();
  for (int i = 0; i < g.size(); ++i) {
    if ((rows[i] & ~all) != 0 || (rows[i] & Bit(i)) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "bad adjacency row");
    }
    ForEachBit(rows[i], [&](int j) {
      if (((rows[j] >> i) & 1U) == 0) {
        throw Error(ErrorCode::kInvalidArgument, "asymmetric adjacency");
      }
    });
  }
  g.rows_ = std::move(rows);
  return g;
}

VertexMask PrimeGraph::all_mask() const {
  return size() == kMaxVertices ? ~VertexMask{0} : Bit(size()) - 1;
}

std::optional<int> PrimeGraph::IndexOf(Prime p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

int PrimeGraph::RequireIndex(Prime p) const {
  if (auto i = IndexOf(p)) return *i;
  throw Error(ErrorCode::kInvalidArgument,
              std::to_string(p) + " is not a vertex", p);
}

bool PrimeGraph::Adjacent(Prime a, Prime b) const {
  return AdjacentAt(RequireIndex(a), RequireIndex(b));
}

int PrimeGraph::degree(int index) const { return std::popcount(rows_[index]); }

std::vector<Edge> PrimeGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < size(); ++i) {
    const VertexMask above = i + 1 >= kMaxVertices ? 0 : ~(Bit(i + 1) - 1);
    ForEachBit(rows_[i] & above,
               [&](int j) { out.emplace_back(vertices_[i], vertices_[j]); });
  }
  return out;
}

int PrimeGraph::edge_count() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Prime> PrimeGraph::PrimesOf(VertexMask mask) const {
  std::vector<Prime> out;
  ForEachBit(mask, [&](int i) { out.push_back(vertices_[i]); });
  return out;
}

VertexMask PrimeGraph::MaskOf(std::span<const Prime> primes) const {
  VertexMask mask = 0;
  for (Prime p : primes) mask |= Bit(RequireIndex(p));
  return mask;
}

PrimeGraph BuildGraph(const DegreeSet& degrees) {
  std::vector<Prime> vertices;
  std::vector<std::vector<Prime>> prime_sets;
  for (std::uint64_t d : degrees.values()) {
    prime_sets.push_back(PrimeSet(d));
    vertices.insert(vertices.end(), prime_sets.back().begin(),
                    prime_sets.back().end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  std::vector<Edge> edges;
  for (const auto& ps : prime_sets) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        edges.emplace_back(ps[i], ps[j]);
      }
    }
  }
  return PrimeGraph(std::move(vertices), edges);
}

PrimeGraph Complement(const PrimeGraph& g) {
  std::vector<VertexMask> rows(g.size());
  for (int i = 0; i < g.size(); ++i) {
    rows[i] = ~g.neighbors(i) & g.all_mask() & ~Bit(i);
  }
  return PrimeGraph::FromAdjacency(g.vertices(), std::move(rows));
}

PrimeGraph Induced(const PrimeGraph& g, std::span<const Prime> subset) {
  const VertexMask keep = g.MaskOf(subset);
  std::vector<Prime> vertices = g.PrimesOf(keep);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if ((keep >> g.RequireIndex(e.first) & 1U) &&
        (keep >> g.RequireIndex(e.second) & 1U)) {
      edges.push_back(e);
    }
  }
  return PrimeGraph(std::move(vertices), edges);
}

std::vector<int> DistancesFrom(const PrimeGraph& g, int source) {
  std::vector<int> dist(g.size(), kUnreachable);
  dist[source] = 0;
  VertexMask frontier = Bit(source);
  VertexMask seen = frontier;
  for (int d = 1; frontier != 0; ++d) {
    VertexMask next = 0;
    ForEachBit(frontier, [&](int i) { next |= g.neighbors(i); });
    next &= ~seen;
    ForEachBit(next, [&](int i) { dist[i] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::vector<std::vector<Prime>> Components(const PrimeGraph& g) {
  std::vector<std::vector<Prime>> out;
  VertexMask unseen = g.all_mask();
  while (unseen != 0) {
    const int start = std::countr_zero(unseen);
    VertexMask comp = 0;
    const auto dist = DistancesFrom(g, start);
    for (int i = 0; i < g.size(); ++i) {
      if (dist[i] != kUnreachable) comp |= Bit(i);
    }
    out.push_back(g.PrimesOf(comp));
    unseen &= ~comp;
  }
  return out;
}

std::optional<int> Distance(const PrimeGraph& g, Prime u, Prime v) {
  const int i = g.RequireIndex(u);
  const int j = g.RequireIndex(v);
  const int d = DistancesFrom(g, i)[j];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

int Diameter(const PrimeGraph& g) {
  if (g.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "diameter of an empty graph is undefined");
  }
  int best = 0;
  for (int i = 0; i < g.size(); ++i) {
    for (int d : DistancesFrom(g, i)) best = std::max(best, d);
  }
  return best;
}

bool IsComplete(const PrimeGraph& g) {
  for (int i = 0; i < g.size(); ++i) {
    if (g.neighbors(i) != (g.all_mask() & ~Bit(i))) return false;
  }
  return true;
}

bool BipartiteCertificate::Validate(const PrimeGraph& g) const {
  if (bipartite) {
    if (static_cast<int>(coloring.size()) != g.size()) return false;
    for (Prime p : g.vertices()) {
      auto it = coloring.find(p);
      if (it == coloring.end() || (it->second != 0 && it->second != 1)) {
        return false;
      }
    }
    for (const auto& [a, b] : g.edges()) {
      if (coloring.at(a) == coloring.at(b)) return false;
    }
    return odd_cycle.empty();
  }
  const std::size_t n = odd_cycle.size();
  if (n < 3 || n % 2 == 0) return false;
  std::vector<Prime> sorted = odd_cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Prime a = odd_cycle[k];
    const Prime b = odd_cycle[(k + 1) % n];
    if (!g.contains(a) || !g.contains(b) || !g.Adjacent(a, b)) return false;
  }
  return true;
}

BipartiteCertificate BipartitionOrOddCycle(const PrimeGraph& g) {
  const int n = g.size();
  std::vector<int> depth(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!g.AdjacentAt(u, v)) continue;
        if (depth[v] == -1) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (depth[v] % 2 == depth[u] % 2) {
          // Climb both tree paths to the common ancestor.
          std::vector<int> left{u};
          std::vector<int> right{v};
          int a = u;
          int b = v;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // common ancestor already ends `left`
          BipartiteCertificate cert;
          cert.bipartite = false;
          std::reverse(left.begin(), left.end());
          for (int i : left) cert.odd_cycle.push_back(g.vertex(i));
          for (int i : right) cert.odd_cycle.push_back(g.vertex(i));
          return cert;
        }
      }
    }
  }
  BipartiteCertificate cert;
  for (int i = 0; i < n; ++i) cert.coloring[g.vertex(i)] = depth[i] % 2;
  return cert;
}

std::string ToDot(const PrimeGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Prime p : g.vertices()) out << "  " << p << ";\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

PrimeGraph ParseDot(std::string_view text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open || Trim(text.substr(0, open)).substr(0, 5) != "graph") {
    throw Error(ErrorCode::kMalformed, "not an undirected DOT graph");
  }
  std::vector<Prime> vertices;
  std::vector<Edge> edges;
  for (std::string_view stmt : Split(text.substr(open + 1, close - open - 1), ';')) {
    stmt = Trim(stmt);
    if (stmt.empty()) continue;
    const auto dash = stmt.find("--");
    if (dash == std::string_view::npos) {
      vertices.push_back(ParsePrimeToken(stmt));
    } else {
      edges.emplace_back(ParsePrimeToken(stmt.substr(0, dash)),
                         ParsePrimeToken(stmt.substr(dash + 2)));
    }
  }
  for (const auto& [a, b] : edges) {
    for (Prime p : {a, b}) {
      if (std::find(vertices.begin(), vertices.end(), p) == vertices.end()) {
        vertices.push_back(p);
      }
    }
  }
  return PrimeGraph(std::move(vertices), edges);
}

PrimeGraph ParseEdgeList(std::string_view edges, std::string_view isolated) {
  std::vector<Prime> vertices;
  std::vector<Edge> edge_list;
  auto add_vertex = [&](Prime p) {
    if (std::find(vertices.begin(), vertices.end(), p) == vertices.end()) {
      vertices.push_back(p);
    }
  };
  if (!Trim(edges).empty()) {
    for (std::string_view item : Split(edges, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) {
        throw Error(ErrorCode::kInvalidArgument,
                    "edge '" + std::string(Trim(item)) + "' is not p-q");
      }
      const Prime a = ParsePrimeToken(item.substr(0, dash));
      const Prime b = ParsePrimeToken(item.substr(dash + 1));
      add_vertex(a);
      add_vertex(b);
      edge_list.emplace_back(a, b);
    }
  }
  if (!Trim(isolated).empty()) {
    for (std::string_view item : Split(isolated, ',')) {
      add_vertex(ParsePrimeToken(item));
    }
  }
  return PrimeGraph(std::move(vertices), edge_list);
}

}  // namespace chargraph
