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

#include <set>

#include "dprox/constructions.hpp"
#include "dprox/io.hpp"
#include "dprox/search.hpp"
#include "oracles.hpp"

namespace dprox {
namespace {

std::vector<std::string> codes(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& m : r.matches) out.push_back(m.digraph6);
  return out;
}

SearchQuery query(DigraphClass cls, ClassOrder order, std::vector<Predicate> preds,
                  Dedup dedup = Dedup::kNone, std::size_t shards = 1) {
  SearchQuery q;
  q.cls = cls;
  q.order = order;
  q.predicates = std::move(preds);
  q.dedup = dedup;
  q.shards = shards;
  return q;
}

/// Every tournament on n vertices, built independently of Enumerator.
std::vector<Digraph> all_tournaments(std::size_t n) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    DigraphBuilder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      (mask >> i) & 1U ? b.add_arc(v, u) : b.add_arc(u, v);
    }
    out.push_back(b.build());
  }
  return out;
}

TEST(Enumerator, Counts) {
  EXPECT_EQ(Enumerator(DigraphClass::kTournaments, {3, 0, 0}).count(), 8u);
  EXPECT_EQ(Enumerator(DigraphClass::kAllDigraphs, {2, 0, 0}).count(), 4u);
  EXPECT_EQ(Enumerator(DigraphClass::kBipartiteTournaments, {4, 2, 2}).count(), 16u);
  EXPECT_EQ(Enumerator(DigraphClass::kSymmetric, {4, 0, 0}).count(), 64u);
}

TEST(Enumerator, MembersAreDistinctAndInClass) {
  const Enumerator en(DigraphClass::kBipartiteTournaments, {5, 2, 3});
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    const Digraph d = en.member(i);
    ASSERT_TRUE(bipartite_tournament_structure(d).has_value());
    seen.insert(to_digraph6(d));
  }
  EXPECT_EQ(seen.size(), en.count());
}

TEST(Enumerator, Ceilings) {
  EXPECT_THROW(Enumerator(DigraphClass::kAllDigraphs, {6, 0, 0}), CeilingError);
  EXPECT_THROW(Enumerator(DigraphClass::kTournaments, {9, 0, 0}), CeilingError);
  EXPECT_THROW(Enumerator(DigraphClass::kBipartiteTournaments, {12, 3, 9}), CeilingError);
}

TEST(Search, TournamentsOnThree) {
  const auto labeled = search(query(DigraphClass::kTournaments, {3, 0, 0}, {}));
  EXPECT_EQ(labeled.matches.size(), 8u);
  const auto classes = search(query(DigraphClass::kTournaments, {3, 0, 0}, {}, Dedup::kCanonical));
  EXPECT_EQ(classes.matches.size(), 2u);
  EXPECT_EQ(classes.labeled_matches, 8u);
}

TEST(Search, StrongTournamentsOnFour) {
  std::size_t oracle_count = 0;
  for (const auto& t : all_tournaments(4)) oracle_count += oracle::strong(t);
  EXPECT_EQ(oracle_count, 24u);
  const auto r = search(query(DigraphClass::kTournaments, {4, 0, 0}, {Predicate::kStrong}));
  EXPECT_EQ(r.matches.size(), 24u);
}

TEST(Search, BalancedTournamentsOnFiveAreRegular) {
  std::set<std::string> want;
  for (const auto& t : all_tournaments(5)) {
    if (!oracle::strong(t)) continue;
    const auto s = oracle::sigma(oracle::distances(t));
    if (*std::min_element(s.begin(), s.end()) != *std::max_element(s.begin(), s.end())) continue;
    want.insert(to_digraph6(t));
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(t.out_neighbors(v).size(), 2u);
  }
  const auto r = search(
      query(DigraphClass::kTournaments, {5, 0, 0}, {Predicate::kStrong, Predicate::kPiEqRho}));
  const auto got = codes(r);
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), want);
  EXPECT_EQ(want.size(), 24u);
  const auto classes = search(query(DigraphClass::kTournaments, {5, 0, 0},
                                    {Predicate::kStrong, Predicate::kPiEqRho}, Dedup::kCanonical));
  ASSERT_EQ(classes.matches.size(), 1u);
  EXPECT_TRUE(oracle::isomorphic(from_digraph6(classes.matches[0].digraph6),
                                 rotational_tournament(5)));
}

TEST(Search, RemotenessCeilingMatchesHaveLongEccentricity) {
  const auto r = search(query(DigraphClass::kAllDigraphs, {4, 0, 0},
                              {Predicate::kStrong, Predicate::kRhoEqHalfN}));
  EXPECT_FALSE(r.matches.empty());
  for (const auto& m : r.matches) {
    const auto e = oracle::ecc(oracle::distances(from_digraph6(m.digraph6)));
    EXPECT_EQ(*std::max_element(e.begin(), e.end()), 3);
  }
}

TEST(Search, ShardCountDoesNotChangeOutput) {
  const std::vector<SearchQuery> queries{
      query(DigraphClass::kTournaments, {6, 0, 0}, {Predicate::kStrong, Predicate::kNonRegular}),
      query(DigraphClass::kAllDigraphs, {4, 0, 0}, {Predicate::kStrong}, Dedup::kCanonical),
      query(DigraphClass::kBipartiteTournaments, {8, 4, 4}, {Predicate::kGood, Predicate::kPiEqRho},
            Dedup::kCanonical),
  };
  for (auto q : queries) {
    q.shards = 1;
    const auto one = search(q);
    for (std::size_t s : {2, 8}) {
      q.shards = s;
      const auto r = search(q);
      ASSERT_EQ(codes(r), codes(one));
      ASSERT_EQ(r.labeled_matches, one.labeled_matches);
      ASSERT_EQ(r.scanned, one.scanned);
    }
  }
}

TEST(Search, LimitAfterSort) {
  auto q = query(DigraphClass::kTournaments, {5, 0, 0}, {Predicate::kStrong});
  const auto all = codes(search(q));
  q.limit = 5;
  q.shards = 4;
  const auto few = codes(search(q));
  EXPECT_EQ(few, std::vector<std::string>(all.begin(), all.begin() + 5));
}

TEST(Predicates, Parsing) {
  EXPECT_EQ(parse_predicate("connected"), Predicate::kStrong);
  EXPECT_EQ(parse_predicate("pi_eq_rho"), Predicate::kPiEqRho);
  EXPECT_EQ(parse_predicate("rho_minus_pi_max"), Predicate::kGapMax);
  EXPECT_THROW(parse_predicate("pretty"), Error);
  EXPECT_EQ(normalize_predicates({Predicate::kPiEqRho, Predicate::kStrong, Predicate::kStrong}),
            (std::vector<Predicate>{Predicate::kStrong, Predicate::kPiEqRho}));
}

TEST(Exhaustive, SmallRunsPass) {
  EXPECT_TRUE(exhaustive_verify(TheoremId::kTournamentBalance, DigraphClass::kTournaments,
                                {5, 0, 0})
                  .passed());
  EXPECT_TRUE(exhaustive_verify(TheoremId::kBadSeparates, DigraphClass::kBipartiteTournaments,
                                {6, 3, 3})
                  .passed());
  for (auto id : theorem_group("thm-2.1"))
    EXPECT_TRUE(exhaustive_verify(id, DigraphClass::kAllDigraphs, {4, 0, 0}).passed());
}

TEST(Exhaustive, CounterexamplesIndependentOfShards) {
  const auto one = exhaustive_verify(TheoremId::kTournamentProximity, DigraphClass::kTournaments,
                                     {6, 0, 0}, 1, 4);
  const auto many = exhaustive_verify(TheoremId::kTournamentProximity,
                                      DigraphClass::kTournaments, {6, 0, 0}, 8, 4);
  EXPECT_EQ(one.inconsistent, many.inconsistent);
  ASSERT_EQ(one.counterexamples.size(), many.counterexamples.size());
  for (std::size_t i = 0; i < one.counterexamples.size(); ++i)
    EXPECT_EQ(one.counterexamples[i].digraph6, many.counterexamples[i].digraph6);
}

TEST(RandomSearch, DegreeSequenceRespected) {
  std::mt19937_64 rng(97);
  const std::vector<std::size_t> degrees{3, 3, 3, 3, 3, 3, 4, 4, 4};
  int built = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph_with_degrees(degrees, rng);
    if (!g) continue;
    ++built;
    ASSERT_TRUE(is_symmetric(*g));
    for (Vertex v = 0; v < 9; ++v) ASSERT_EQ(g->out_neighbors(v).size(), degrees[v]);
  }
  EXPECT_GT(built, 100);
}

TEST(RandomSearch, ShardIndependentAndFindsTarget) {
  RandomSearchQuery q;
  q.degrees = {3, 3, 3, 3, 3, 3, 4, 4, 4};
  q.predicates = {Predicate::kStrong, Predicate::kPiEqRho, Predicate::kNonRegular};
  q.seed = 1;
  q.iterations = 20000;
  q.target = fig1_graph();
  q.shards = 1;
  const auto one = random_search(q);
  ASSERT_TRUE(one.first_target_hit.has_value());
  for (std::size_t s : {2, 8}) {
    q.shards = s;
    const auto r = random_search(q);
    EXPECT_EQ(r.first_target_hit, one.first_target_hit);
    EXPECT_EQ(codes(r.result), codes(one.result));
  }
  bool target_seen = false;
  for (const auto& m : one.result.matches)
    target_seen = target_seen || oracle::isomorphic(from_digraph6(m.digraph6), fig1_graph());
  EXPECT_TRUE(target_seen);
}

}  // namespace
}  // namespace dprox
