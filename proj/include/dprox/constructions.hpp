// Copyright 2026 The dprox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generators for the extremal families.
//
// Labeling convention: a 1-based vertex v_i becomes label i-1; for the
// bipartite families part A is labeled first, then part B.

#ifndef DPROX_CONSTRUCTIONS_HPP
#define DPROX_CONSTRUCTIONS_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dprox/digraph.hpp"

namespace dprox {

/// Arcs (i, i+1 mod n).
inline Digraph dicycle(std::size_t n) {
  if (n < 2) throw Error("dicycle needs n >= 2");
  DigraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_arc(i, static_cast<Vertex>((i + 1) % n));
  return b.build();
}

inline Digraph complete_digraph(std::size_t n) {
  if (n < 1) throw Error("complete digraph needs n >= 1");
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) b.add_arc(u, v);
  return b.build();
}

/// Vertex i beats i+1, ..., i+k (mod 2k+1).
inline Digraph rotational_tournament(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error("rotational tournament needs odd n >= 3");
  DigraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t s = 1; s <= (n - 1) / 2; ++s)
      b.add_arc(i, static_cast<Vertex>((i + s) % n));
  return b.build();
}

/// The unique tournament with remoteness n/2: a forward Hamiltonian path
/// plus every backward arc that skips at least one vertex.
inline Digraph extremal_tournament(std::size_t n) {
  if (n < 3) throw Error("extremal tournament needs n >= 3");
  DigraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_arc(i, i + 1);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 2; j < n; ++j) b.add_arc(j, i);
  return b.build();
}

/// Hub v0 beats everyone; v1..v_{n-1} form a dicycle; v_c returns to v0.
/// Radius 1, diameter n-1.
inline Digraph hub_digraph(std::size_t n, std::size_t c) {
  if (n < 3) throw Error("hub digraph needs n >= 3");
  if (c < 1 || c > n - 1) throw Error("hub digraph needs 1 <= c <= n-1");
  DigraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j) b.add_arc(0, j);
  for (Vertex p = 1; p + 1 < n; ++p) b.add_arc(p, p + 1);
  b.add_arc(static_cast<Vertex>(n - 1), 1);
  b.add_arc(static_cast<Vertex>(c), 0);
  return b.build();
}

/// Path 0->1->...->n-1 plus the given backward arcs (j,i), i < j.
///
/// Any arc (i,j) with j > i+1 would be a forward shortcut and is rejected,
/// as is a result that is not strong. Every accepted digraph has a vertex
/// (label 0) of eccentricity n-1.
inline Digraph ham_extremal(std::size_t n, std::span<const Arc> back_arcs) {
  if (n < 2) throw Error("ham_extremal needs n >= 2");
  DigraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_arc(i, i + 1);
  for (const auto& [from, to] : back_arcs) {
    if (from >= n || to >= n) throw Error("back arc label out of range");
    if (to > from + 1)
      throw Error("arc (" + std::to_string(from) + "," + std::to_string(to) +
                  ") is a forward shortcut");
    if (to != from + 1) b.add_arc(from, to);
  }
  auto d = b.build();
  if (!is_strong(d)) throw Error("ham_extremal: resulting digraph is not strong");
  return d;
}

/// Equal parts A1,A2 | B1,B2 of size `half`: A_i beats B_i, B_i beats A_{3-i}.
inline Digraph bipartite_equal(std::size_t half) {
  if (half < 1) throw Error("bipartite_equal needs half >= 1");
  const std::size_t n = 4 * half;
  DigraphBuilder b(n);
  auto a_block = [&](Vertex v) { return v / half; };                // 0 or 1
  auto b_block = [&](Vertex u) { return (u - 2 * half) / half; };   // 0 or 1
  for (Vertex v = 0; v < 2 * half; ++v) {
    for (Vertex u = static_cast<Vertex>(2 * half); u < n; ++u) {
      if (a_block(v) == b_block(u))
        b.add_arc(v, u);
      else
        b.add_arc(u, v);
    }
  }
  return b.build();
}

/// The fixed 10-vertex bipartite tournament: A = {0..3}, B = {4..9}; the
/// listed out-neighbourhoods of A determine every arc.
inline Digraph bipartite_T1() {
  static constexpr std::array<std::array<Vertex, 3>, 4> kOut = {{
      {0, 1, 2},
      {0, 3, 4},
      {1, 3, 5},
      {2, 4, 5},
  }};
  DigraphBuilder b(10);
  for (Vertex a = 0; a < 4; ++a) {
    std::array<bool, 6> beats{};
    for (Vertex j : kOut[a]) beats[j] = true;
    for (Vertex j = 0; j < 6; ++j) {
      if (beats[j])
        b.add_arc(a, 4 + j);
      else
        b.add_arc(4 + j, a);
    }
  }
  return b.build();
}

inline Digraph bipartite_blowup(std::size_t t) {
  if (t < 1) throw Error("bipartite_blowup needs t >= 1");
  return blow_up(bipartite_T1(), t);
}

/// Non-regular order-9 graph (degrees 3 and 4) whose vertices all have the
/// same distance sum.
inline Digraph fig1_graph() {
  static constexpr std::array<Arc, 15> kEdges = {{
      {0, 3}, {0, 6}, {0, 7}, {1, 4}, {1, 6}, {1, 8}, {2, 5}, {2, 7},
      {2, 8}, {3, 6}, {3, 7}, {4, 6}, {4, 8}, {5, 7}, {5, 8},
  }};
  return from_undirected_edge_list(9, kEdges);
}

inline Digraph fig1_blowup(std::size_t t) {
  if (t < 1) throw Error("fig1_blowup needs t >= 1");
  return blow_up(fig1_graph(), t);
}

enum class Family {
  kDicycle,
  kExtremalTournament,
  kHubDigraph,
  kHamExtremal,
  kBipartiteEqual,
  kBipartiteT1,
  kBipartiteBlowup,
  kFig1Graph,
  kFig1Blowup,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames = {{
    {Family::kDicycle, "dicycle"},
    {Family::kExtremalTournament, "extremal_tournament"},
    {Family::kHubDigraph, "hub_digraph"},
    {Family::kHamExtremal, "ham_extremal"},
    {Family::kBipartiteEqual, "bipartite_equal"},
    {Family::kBipartiteT1, "bipartite_T1"},
    {Family::kBipartiteBlowup, "bipartite_blowup"},
    {Family::kFig1Graph, "fig1_graph"},
    {Family::kFig1Blowup, "fig1_blowup"},
}};

inline std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (const auto& [fam, name_] : kFamilyNames)
    if (name_ == name) return fam;
  throw Error("unknown construction family '" + std::string(name) + "'");
}

/// A family plus its integer parameters (n, c, half, t) and, for
/// ham_extremal, the backward arcs.
struct ConstructionSpec {
  Family family = Family::kDicycle;
  std::map<std::string, long long> params;
  std::vector<Arc> back_arcs;

  long long param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
      throw Error(std::string(family_name(family)) + " needs parameter '" + key + "'");
    return it->second;
  }
};

inline Digraph build(const ConstructionSpec& spec) {
  auto positive = [&](const std::string& key) -> std::size_t {
    const long long v = spec.param(key);
    if (v < 1) throw Error("parameter '" + key + "' must be positive");
    return static_cast<std::size_t>(v);
  };
  switch (spec.family) {
    case Family::kDicycle:
      return dicycle(positive("n"));
    case Family::kExtremalTournament:
      return extremal_tournament(positive("n"));
    case Family::kHubDigraph:
      return hub_digraph(positive("n"), positive("c"));
    case Family::kHamExtremal:
      return ham_extremal(positive("n"), spec.back_arcs);
    case Family::kBipartiteEqual:
      return bipartite_equal(positive("half"));
    case Family::kBipartiteT1:
      return bipartite_T1();
    case Family::kBipartiteBlowup:
      return bipartite_blowup(positive("t"));
    case Family::kFig1Graph:
      return fig1_graph();
    case Family::kFig1Blowup:
      return fig1_blowup(positive("t"));
  }
  throw Error("unhandled family");
}

}  // namespace dprox

#endif  // DPROX_CONSTRUCTIONS_HPP
