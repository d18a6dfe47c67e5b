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

#include <gtest/gtest.h>

#include <random>

#include "dprox/constructions.hpp"
#include "dprox/distance.hpp"
#include "oracles.hpp"

namespace dprox {
namespace {

using X = std::vector<std::uint32_t>;

TEST(Profile, Dicycle) {
  const auto p = bfs_profile(dicycle(5), 0);
  EXPECT_EQ(p.distance_degree, (X{1, 1, 1, 1, 1}));
  EXPECT_EQ(p.sigma, 10u);
  EXPECT_EQ(p.ecc, 4u);
  EXPECT_TRUE(p.all_reachable);
}

// The per-vertex profiles of the order-9 graph are (1,3,4,1) and (1,4,2,2);
// both sum to 14.
TEST(Profile, Fig1Graph) {
  const Digraph g = fig1_graph();
  for (Vertex v = 0; v < 6; ++v) {
    const auto p = bfs_profile(g, v);
    EXPECT_EQ(p.distance_degree, (X{1, 3, 4, 1})) << v;
    EXPECT_EQ(p.sigma, 14u);
  }
  for (Vertex v = 6; v < 9; ++v) {
    const auto p = bfs_profile(g, v);
    EXPECT_EQ(p.distance_degree, (X{1, 4, 2, 2})) << v;
    EXPECT_EQ(p.sigma, 14u);
  }
}

TEST(Profile, UnreachableLeavesSigmaEmpty) {
  const auto p = bfs_profile(from_edge_list(3, {{0, 1}}), 0);
  EXPECT_FALSE(p.all_reachable);
  EXPECT_FALSE(p.sigma.has_value());
  EXPECT_FALSE(p.dist[2].has_value());
  EXPECT_EQ(p.dist[1], 1u);
}

TEST(DistanceDegreeSum, Examples) {
  EXPECT_EQ(g_of(X{1, 3, 4, 1}), 14);
  EXPECT_EQ(g_of(X{1, 1, 1, 1, 1}), 10);
  for (std::uint32_t n = 2; n < 20; ++n) EXPECT_EQ(g_of(X{1, n - 1}), n - 1);
}

// Pushing one vertex from layer i to layer i+1 raises g by exactly one.
TEST(DistanceDegreeSum, StrictIncreaseUnderShift) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 2000; ++it) {
    X x{1};
    const std::size_t len = 2 + rng() % 6;
    for (std::size_t i = 1; i < len; ++i) x.push_back(1 + rng() % 4);
    const std::size_t i = 1 + rng() % (len - 1);
    if (x[i] < 2 && i + 1 == len) continue;
    X y = x;
    --y[i];
    if (i + 1 == len) y.push_back(0);
    ++y[i + 1];
    std::int64_t direct_x = 0, direct_y = 0;
    for (std::size_t k = 0; k < x.size(); ++k) direct_x += static_cast<std::int64_t>(k * x[k]);
    for (std::size_t k = 0; k < y.size(); ++k) direct_y += static_cast<std::int64_t>(k * y[k]);
    ASSERT_EQ(g_of(x), direct_x);
    ASSERT_EQ(g_of(y), direct_x + 1);
    ASSERT_GT(g_of(y), g_of(x));
  }
}

TEST(ProximityRemoteness, Dicycle) {
  for (std::size_t n = 2; n < 12; ++n) {
    const auto pr = proximity_remoteness(dicycle(n));
    EXPECT_EQ(pr.pi, Rational(static_cast<std::int64_t>(n), 2));
    EXPECT_EQ(pr.rho, pr.pi);
  }
}

TEST(ProximityRemoteness, Complete) {
  for (std::size_t n = 2; n < 12; ++n) {
    const auto pr = proximity_remoteness(complete_digraph(n));
    EXPECT_EQ(pr.pi, Rational(1));
    EXPECT_EQ(pr.rho, Rational(1));
  }
}

TEST(ProximityRemoteness, BipartiteT1) {
  const Digraph t = bipartite_T1();
  const auto m = oracle::distances(t);
  for (auto s : oracle::sigma(m)) EXPECT_EQ(s, 18);
  const auto pr = proximity_remoteness(t);
  EXPECT_EQ(pr.pi, Rational(2));
  EXPECT_EQ(pr.rho, Rational(2));
}

TEST(ProximityRemoteness, NotStrongNamesPair) {
  try {
    proximity_remoteness(from_edge_list(3, {{0, 1}, {1, 2}}));
    FAIL();
  } catch (const NotStrongError& e) {
    EXPECT_EQ(e.pair(), (Arc{1, 0}));
  }
  EXPECT_FALSE(distance_sums(from_edge_list(2, {{0, 1}})).has_value());
}

TEST(ProximityRemoteness, WitnessesAreSmallestLabels) {
  const auto pr = proximity_remoteness(hub_digraph(6, 3));
  const auto s = oracle::sigma(oracle::distances(hub_digraph(6, 3)));
  const auto lo = std::min_element(s.begin(), s.end()) - s.begin();
  const auto hi = std::max_element(s.begin(), s.end()) - s.begin();
  EXPECT_EQ(pr.prox_witness, static_cast<Vertex>(lo));
  EXPECT_EQ(pr.rem_witness, static_cast<Vertex>(hi));
}

TEST(RadiusDiameter, Families) {
  for (std::size_t n = 3; n < 10; ++n) {
    for (std::size_t c = 1; c < n; ++c) {
      const auto rd = radius_diameter(hub_digraph(n, c));
      EXPECT_EQ(rd.radius, 1u);
      EXPECT_EQ(rd.diameter, n - 1);
    }
    const auto dc = radius_diameter(dicycle(n));
    EXPECT_EQ(dc.radius, n - 1);
    EXPECT_EQ(dc.diameter, n - 1);
    const auto k = radius_diameter(complete_digraph(n));
    EXPECT_EQ(k.radius, 1u);
    EXPECT_EQ(k.diameter, 1u);
  }
}

TEST(Kings, Cases) {
  for (Vertex u = 0; u < 6; ++u) EXPECT_FALSE(is_p_king(dicycle(6), u, 4));
  EXPECT_TRUE(is_p_king(dicycle(6), 0, 5));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Digraph t = oracle::random_tournament(2 + rng() % 9, rng);
    const auto deg = degree_summary(t);
    for (Vertex v = 0; v < t.order(); ++v)
      if (deg.out_degrees[v] == deg.max_out) { ASSERT_TRUE(is_p_king(t, v, 2)); }
  }
}

TEST(Oracle, RandomStrongDigraphsAgree) {
  std::mt19937_64 rng(43);
  int strong_seen = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::size_t n = 2 + rng() % 7;
    const Digraph d = oracle::random_digraph(n, 0.45, rng);
    const auto m = oracle::distances(d);
    const auto sums = distance_sums(d);
    ASSERT_EQ(sums.has_value(), oracle::strong(m));
    if (!sums) continue;
    ++strong_seen;
    const auto s = oracle::sigma(m);
    const auto e = oracle::ecc(m);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(static_cast<std::int64_t>(sums->sigma[v]), s[v]);
      ASSERT_EQ(static_cast<std::int64_t>(sums->ecc[v]), e[v]);
      ASSERT_EQ(static_cast<std::int64_t>(g_of(bfs_profile(d, v).distance_degree)), s[v]);
    }
    const auto want = oracle::summary(d);
    const auto pr = proximity_remoteness(d);
    ASSERT_EQ(pr.pi.numerator(), want.pi.num);
    ASSERT_EQ(pr.pi.denominator(), want.pi.den);
    ASSERT_EQ(pr.rho.numerator(), want.rho.num);
    ASSERT_EQ(pr.rho.denominator(), want.rho.den);
  }
  EXPECT_GT(strong_seen, 500);
}

TEST(Metrics, Report) {
  const auto r = compute_metrics(fig1_graph());
  EXPECT_TRUE(r.is_strong);
  EXPECT_TRUE(r.is_symmetric);
  EXPECT_FALSE(r.is_regular);
  EXPECT_TRUE(r.pi_equals_rho());
  EXPECT_EQ(*r.pi, Rational(14, 8));
  const auto ns = compute_metrics(from_edge_list(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(ns.is_strong);
  EXPECT_FALSE(ns.pi.has_value());
  EXPECT_EQ(ns.unreachable, (Arc{1, 0}));
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(Rational(7, 4)), "1.750000");
  EXPECT_EQ(to_decimal(Rational(5, 3)), "1.666667");
  EXPECT_EQ(to_decimal(Rational(3)), "3.000000");
}

}  // namespace
}  // namespace dprox
