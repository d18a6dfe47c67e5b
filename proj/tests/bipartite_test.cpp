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

#include "dprox/bipartite.hpp"
#include "dprox/constructions.hpp"
#include "oracles.hpp"

namespace dprox {
namespace {

/// Random orientation of K_{a,b}; A = 0..a-1, B = a..a+b-1.
template <typename Rng>
Digraph random_bipartite(std::size_t a, std::size_t b, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  DigraphBuilder g(a + b);
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = static_cast<Vertex>(a); y < a + b; ++y)
      coin(rng) ? g.add_arc(x, y) : g.add_arc(y, x);
  return g.build();
}

/// Nested out-sets between two same-part vertices, by direct set scan.
bool oracle_bad(const Digraph& t, std::size_t a) {
  const std::size_t n = t.order();
  auto same_part = [&](Vertex u, Vertex v) { return (u < a) == (v < a); };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !same_part(u, v)) continue;
      bool subset = true, proper = false;
      for (Vertex x = 0; x < n; ++x) {
        if (t.has_arc(u, x) && !t.has_arc(v, x)) subset = false;
        if (!t.has_arc(u, x) && t.has_arc(v, x)) proper = true;
      }
      if (subset && proper) return true;
    }
  }
  return false;
}

TEST(GoodBad, Examples) {
  EXPECT_TRUE(classify_good_bad(bipartite_T1()).good);
  EXPECT_TRUE(classify_good_bad(bipartite_equal(2)).good);
  const Digraph small = from_edge_list(3, {{0, 2}, {2, 1}});
  const auto r = classify_good_bad(small);
  EXPECT_FALSE(r.good);
  EXPECT_EQ(r.bad_witness, (Arc{1, 0}));
}

TEST(GoodBad, AgreesWithSetScan) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4;
    const Digraph t = random_bipartite(a, b, rng);
    const auto r = classify_good_bad(t);
    ASSERT_EQ(!r.good, oracle_bad(t, a));
    if (r.bad_witness) {
      const auto [u, v] = *r.bad_witness;
      for (Vertex x = 0; x < t.order(); ++x)
        if (t.has_arc(u, x)) { ASSERT_TRUE(t.has_arc(v, x)); }
      ASSERT_LT(t.out_neighbors(u).size(), t.out_neighbors(v).size());
    }
  }
}

TEST(Classes, Examples) {
  const auto t1 = neighborhood_classes(bipartite_T1());
  EXPECT_EQ(t1.size(), 10u);
  for (const auto& c : t1) EXPECT_EQ(c.mu(), 1u);
  for (std::size_t t = 1; t <= 4; ++t)
    for (const auto& c : neighborhood_classes(bipartite_blowup(t))) EXPECT_EQ(c.mu(), t);
  for (std::size_t h = 1; h <= 4; ++h) {
    const auto cls = neighborhood_classes(bipartite_equal(h));
    EXPECT_EQ(cls.size(), 4u);
    for (const auto& c : cls) EXPECT_EQ(c.mu(), h);
  }
}

TEST(Classes, MuAgreesWithOracle) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 500; ++i) {
    const Digraph t = random_bipartite(1 + rng() % 4, 1 + rng() % 4, rng);
    const auto ps = *bipartite_tournament_structure(t);
    const auto mu = mu_values(t, ps);
    for (Vertex v = 0; v < t.order(); ++v) ASSERT_EQ(mu[v], oracle::same_out_set(t, v));
  }
}

TEST(SigmaFormula, Arithmetic) {
  EXPECT_EQ(sigma_formula_value(4, 6, 1, 3), 18);
  EXPECT_EQ(sigma_formula_value(6, 4, 1, 2), 18);
  EXPECT_EQ(sigma_formula_value(8, 12, 2, 6), 40);
}

TEST(SigmaFormula, MatchesBfsOnFamilies) {
  for (const Digraph& t : {bipartite_T1(), bipartite_blowup(2), bipartite_blowup(3),
                           bipartite_equal(2), bipartite_equal(3)}) {
    const auto s = oracle::sigma(oracle::distances(t));
    for (Vertex v = 0; v < t.order(); ++v) EXPECT_EQ(sigma_by_formula(t, v), s[v]);
  }
  EXPECT_EQ(oracle::sigma(oracle::distances(bipartite_blowup(2)))[0], 40);
}

TEST(SigmaFormula, MatchesBfsOnRandomGoodStrong) {
  std::mt19937_64 rng(57);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const std::size_t a = 2 + rng() % 4, b = 2 + rng() % 4;
    const Digraph t = random_bipartite(a, b, rng);
    const auto m = oracle::distances(t);
    if (!oracle::strong(m) || oracle_bad(t, a)) continue;
    ++checked;
    const auto s = oracle::sigma(m);
    for (Vertex v = 0; v < t.order(); ++v) ASSERT_EQ(sigma_by_formula(t, v), s[v]);
  }
  EXPECT_GT(checked, 20);
}

TEST(SigmaFormula, RejectsBadOrWeak) {
  EXPECT_THROW(sigma_by_formula(from_edge_list(3, {{0, 2}, {2, 1}}), 0), Error);
}

TEST(EqualityCriterion, Examples) {
  const auto t1 = check_equality_criterion(bipartite_T1());
  EXPECT_EQ(t1.constant_a, 2);
  EXPECT_EQ(t1.constant_b, 2);
  EXPECT_EQ(t1.constant_c, 2);
  EXPECT_TRUE(t1.pi_equals_rho);
  EXPECT_TRUE(t1.criterion_predicts_equality);
  EXPECT_TRUE(t1.pairwise_relations_hold);
  const auto e2 = check_equality_criterion(bipartite_equal(2));
  EXPECT_EQ(e2.constant_c, 4);
  EXPECT_TRUE(e2.pi_equals_rho);
  EXPECT_THROW(check_equality_criterion(from_edge_list(3, {{0, 2}, {2, 1}})), NotStrongError);
}

TEST(EqualityCriterion, BiconditionalOnRandomInstances) {
  std::mt19937_64 rng(59);
  int bad_strong = 0, equal = 0;
  for (int i = 0; i < 6000; ++i) {
    const std::size_t a = 2 + rng() % 3, b = 2 + rng() % 3;
    const Digraph t = random_bipartite(a, b, rng);
    const auto m = oracle::distances(t);
    if (!oracle::strong(m)) continue;
    const auto s = oracle::sigma(m);
    const bool eq = std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
    const auto r = check_equality_criterion(t);
    ASSERT_EQ(r.pi_equals_rho, eq);
    ASSERT_EQ(r.criterion_predicts_equality, eq);
    if (oracle_bad(t, a)) {
      ++bad_strong;
      ASSERT_FALSE(eq);
    }
    equal += eq;
  }
  EXPECT_GT(bad_strong, 100);
  EXPECT_GT(equal, 5);
}

TEST(UniformClasses, Families) {
  for (std::size_t t = 1; t <= 3; ++t) EXPECT_TRUE(check_cor_reg(bipartite_blowup(t)));
  for (std::size_t h = 1; h <= 3; ++h) EXPECT_TRUE(check_cor_reg(bipartite_equal(h)));
}

// A good strong instance with constant mu whose out-degrees are off balance.
TEST(UniformClasses, UnbalancedInstanceHasUnequalMetrics) {
  std::mt19937_64 rng(61);
  bool found = false;
  for (int i = 0; i < 20000 && !found; ++i) {
    const Digraph t = random_bipartite(3, 3, rng);
    const auto m = oracle::distances(t);
    if (!oracle::strong(m) || oracle_bad(t, 3)) continue;
    const std::size_t mu0 = oracle::same_out_set(t, 0);
    bool constant = true;
    for (Vertex v = 1; v < 6; ++v) constant = constant && oracle::same_out_set(t, v) == mu0;
    if (!constant) continue;
    bool balanced = true;
    for (Vertex v = 0; v < 6; ++v) balanced = balanced && 2 * t.out_neighbors(v).size() == 3;
    if (balanced) continue;
    found = true;
    EXPECT_FALSE(check_cor_reg(t));
    const auto s = oracle::sigma(m);
    EXPECT_NE(*std::min_element(s.begin(), s.end()), *std::max_element(s.begin(), s.end()));
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace dprox
