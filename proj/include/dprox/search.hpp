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

// Exhaustive enumeration of small labeled digraph classes, predicate
// filtering, canonical deduplication and sharded execution.
//
// Every class is a set of "slots" (candidate arcs or edges); member i is the
// digraph whose slot k is switched on iff bit k of i is set, so members come
// in binary counting order over the slot list:
//
//   all_digraphs     ordered pairs (u,v), u != v, row-major      n <= 5
//   tournaments      pairs u < v, lexicographic; bit on = u->v   n <= 8
//   bipartite (a,b)  pairs (x in A, y in B), lexicographic;
//                    A = 0..a-1, B = a..a+b-1; bit on = x->y     a*b <= 26
//   symmetric        pairs u < v; bit on = edge {u,v}           n <= 8
//
// A shard is a contiguous index range; shard i of k covers
// [i*N/k, (i+1)*N/k). Results are merged and sorted, so output does not
// depend on the shard count.

#ifndef DPROX_SEARCH_HPP
#define DPROX_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dprox/bipartite.hpp"
#include "dprox/canonical.hpp"
#include "dprox/digraph.hpp"
#include "dprox/distance.hpp"
#include "dprox/io.hpp"
#include "dprox/verifiers.hpp"

namespace dprox {

enum class DigraphClass { kAllDigraphs, kTournaments, kBipartiteTournaments, kSymmetric };

inline std::string_view class_name(DigraphClass c) {
  switch (c) {
    case DigraphClass::kAllDigraphs: return "all_digraphs";
    case DigraphClass::kTournaments: return "tournaments";
    case DigraphClass::kBipartiteTournaments: return "bipartite_tournaments";
    case DigraphClass::kSymmetric: return "symmetric_digraphs";
  }
  return "?";
}

inline DigraphClass parse_class(std::string_view name) {
  if (name == "all_digraphs" || name == "all") return DigraphClass::kAllDigraphs;
  if (name == "tournaments") return DigraphClass::kTournaments;
  if (name == "bipartite_tournaments" || name == "bipartite") return DigraphClass::kBipartiteTournaments;
  if (name == "symmetric_digraphs" || name == "symmetric" || name == "graphs")
    return DigraphClass::kSymmetric;
  throw Error("unknown digraph class '" + std::string(name) + "'");
}

/// Size parameters: `n` for the single-order classes, `a` and `b` for
/// bipartite tournaments (n = a + b).
struct ClassOrder {
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

class CeilingError : public Error {
 public:
  using Error::Error;
};

/// Labeled members of one class, addressable by index.
class Enumerator {
 public:
  Enumerator(DigraphClass cls, ClassOrder order) : cls_(cls), order_(order) {
    switch (cls) {
      case DigraphClass::kAllDigraphs:
        if (order.n < 1 || order.n > 5)
          throw CeilingError("all_digraphs supports 1 <= n <= 5; use randomized search beyond");
        n_ = order.n;
        for (Vertex u = 0; u < n_; ++u)
          for (Vertex v = 0; v < n_; ++v)
            if (u != v) slots_.emplace_back(u, v);
        break;
      case DigraphClass::kTournaments:
      case DigraphClass::kSymmetric:
        if (order.n < 1 || order.n > 8)
          throw CeilingError(std::string(class_name(cls)) +
                             " supports 1 <= n <= 8; use randomized search beyond");
        n_ = order.n;
        for (Vertex u = 0; u < n_; ++u)
          for (Vertex v = u + 1; v < n_; ++v) slots_.emplace_back(u, v);
        break;
      case DigraphClass::kBipartiteTournaments:
        if (order.a < 1 || order.b < 1 || order.a * order.b > 26)
          throw CeilingError("bipartite_tournaments supports a, b >= 1 with a*b <= 26");
        n_ = order.a + order.b;
        for (Vertex x = 0; x < order.a; ++x)
          for (Vertex y = static_cast<Vertex>(order.a); y < n_; ++y) slots_.emplace_back(x, y);
        break;
    }
  }

  DigraphClass digraph_class() const { return cls_; }
  const ClassOrder& class_order() const { return order_; }
  std::size_t order() const { return n_; }
  std::uint64_t count() const { return std::uint64_t{1} << slots_.size(); }

  Digraph member(std::uint64_t index) const {
    DigraphBuilder b(n_);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      const bool on = (index >> k) & 1U;
      const auto [u, v] = slots_[k];
      switch (cls_) {
        case DigraphClass::kAllDigraphs:
          if (on) b.add_arc(u, v);
          break;
        case DigraphClass::kTournaments:
        case DigraphClass::kBipartiteTournaments:
          if (on) b.add_arc(u, v);
          else b.add_arc(v, u);
          break;
        case DigraphClass::kSymmetric:
          if (on) {
            b.add_arc(u, v);
            b.add_arc(v, u);
          }
          break;
      }
    }
    return b.build();
  }

  /// Index range [begin, end) of shard i out of k.
  std::pair<std::uint64_t, std::uint64_t> shard_range(std::size_t i, std::size_t k) const {
    const auto total = count();
    const auto lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * i) / k);
    const auto hi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (i + 1)) / k);
    return {lo, hi};
  }

  /// Parts for part-respecting canonical forms, bipartite class only.
  std::optional<PartiteStructure> parts() const {
    if (cls_ != DigraphClass::kBipartiteTournaments) return std::nullopt;
    PartiteStructure ps;
    ps.parts.resize(2);
    for (Vertex v = 0; v < n_; ++v) ps.parts[v < order_.a ? 0 : 1].push_back(v);
    return ps;
  }

 private:
  DigraphClass cls_;
  ClassOrder order_;
  std::size_t n_ = 0;
  std::vector<Arc> slots_;
};

/// Runs fn(shard_index, begin, end) on `shards` threads.
template <typename Fn>
void run_sharded(std::uint64_t total, std::size_t shards, Fn&& fn) {
  shards = std::max<std::size_t>(1, shards);
  if (shards == 1) {
    fn(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(shards);
  for (std::size_t i = 0; i < shards; ++i) {
    const auto lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * i) / shards);
    const auto hi =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (i + 1)) / shards);
    workers.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
  }
}

// ---------------------------------------------------------------------------
// Predicates

enum class Predicate {
  kMinDegreeOne,  // delta+ >= 1 and delta- >= 1
  kRegular,
  kNonRegular,
  kStrong,
  kGood,
  kBad,
  kPiEqRho,
  kPiNeRho,
  kPiEqOne,
  kRhoEqOne,
  kPiEqHalfN,
  kRhoEqHalfN,
  kGapMax,  // rho - pi == n/2 - 1
};

inline constexpr std::array<std::pair<Predicate, std::string_view>, 13> kPredicateNames = {{
    {Predicate::kMinDegreeOne, "min_degree_one"},
    {Predicate::kRegular, "regular"},
    {Predicate::kNonRegular, "non_regular"},
    {Predicate::kStrong, "strong"},
    {Predicate::kGood, "good"},
    {Predicate::kBad, "bad"},
    {Predicate::kPiEqRho, "pi_eq_rho"},
    {Predicate::kPiNeRho, "pi_ne_rho"},
    {Predicate::kPiEqOne, "pi_eq_one"},
    {Predicate::kRhoEqOne, "rho_eq_one"},
    {Predicate::kPiEqHalfN, "pi_eq_half_n"},
    {Predicate::kRhoEqHalfN, "rho_eq_half_n"},
    {Predicate::kGapMax, "equality_thm_2_2"},
}};

inline std::string_view predicate_name(Predicate p) {
  for (const auto& [q, name] : kPredicateNames)
    if (q == p) return name;
  return "?";
}

inline Predicate parse_predicate(std::string_view name) {
  if (name == "connected") return Predicate::kStrong;
  if (name == "rho_minus_pi_max") return Predicate::kGapMax;
  for (const auto& [q, name_] : kPredicateNames)
    if (name_ == name) return q;
  throw Error("unknown predicate '" + std::string(name) + "'");
}

/// Sorted cheap to expensive: degree filters, strength, class structure,
/// then anything needing distances. The enum order is that ranking.
inline std::vector<Predicate> normalize_predicates(std::vector<Predicate> preds) {
  std::sort(preds.begin(), preds.end());
  preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
  return preds;
}

/// Evaluates a normalized conjunction, short-circuiting. Distance-based
/// predicates fail on non-strong digraphs.
inline bool matches(const Digraph& d, std::span<const Predicate> preds) {
  std::optional<DegreeSummary> deg;
  std::optional<std::optional<DistanceSums>> sums;
  std::optional<GoodBadResult> goodbad;
  auto degrees = [&]() -> const DegreeSummary& {
    if (!deg) deg = degree_summary(d);
    return *deg;
  };
  auto distances = [&]() -> const std::optional<DistanceSums>& {
    if (!sums) sums = distance_sums(d);
    return *sums;
  };
  auto good = [&]() -> std::optional<bool> {
    if (!goodbad) {
      auto ps = bipartite_tournament_structure(d);
      if (!ps) return std::nullopt;
      goodbad = classify_good_bad(d, *ps);
    }
    return goodbad->good;
  };
  const auto n = static_cast<std::int64_t>(d.order());
  for (Predicate p : preds) {
    bool ok = true;
    switch (p) {
      case Predicate::kMinDegreeOne:
        ok = d.order() == 1 || (degrees().min_out >= 1 && degrees().min_in >= 1);
        break;
      case Predicate::kRegular: ok = degrees().min_semi == degrees().max_semi; break;
      case Predicate::kNonRegular: ok = degrees().min_semi != degrees().max_semi; break;
      case Predicate::kStrong:
        ok = d.order() == 1 || (degrees().min_out >= 1 && degrees().min_in >= 1 &&
                                distances().has_value());
        break;
      case Predicate::kGood: ok = good().value_or(false); break;
      case Predicate::kBad: ok = !good().value_or(true); break;
      default: {
        const auto& s = distances();
        if (!s || d.order() < 2) return false;
        const auto [lo, hi] = std::minmax_element(s->sigma.begin(), s->sigma.end());
        const Rational pi(static_cast<std::int64_t>(*lo), n - 1);
        const Rational rho(static_cast<std::int64_t>(*hi), n - 1);
        switch (p) {
          case Predicate::kPiEqRho: ok = *lo == *hi; break;
          case Predicate::kPiNeRho: ok = *lo != *hi; break;
          case Predicate::kPiEqOne: ok = pi == 1; break;
          case Predicate::kRhoEqOne: ok = rho == 1; break;
          case Predicate::kPiEqHalfN: ok = pi == Rational(n, 2); break;
          case Predicate::kRhoEqHalfN: ok = rho == Rational(n, 2); break;
          case Predicate::kGapMax: ok = rho - pi == Rational(n, 2) - 1; break;
          default: break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Search

enum class Dedup { kNone, kCanonical };

struct SearchQuery {
  DigraphClass cls = DigraphClass::kTournaments;
  ClassOrder order;
  std::vector<Predicate> predicates;
  Dedup dedup = Dedup::kNone;
  /// 0 = unlimited. Applied after sorting, so it is shard-independent.
  std::size_t limit = 0;
  std::size_t shards = 1;
};

struct SearchMatch {
  std::string digraph6;
  MetricsReport metrics;
  /// Labeled members in the class (1 without dedup).
  std::uint64_t labeled_count = 1;
};

struct SearchResult {
  std::vector<SearchMatch> matches;
  std::uint64_t scanned = 0;
  std::uint64_t labeled_matches = 0;
  std::chrono::milliseconds elapsed{0};
  std::optional<std::uint64_t> seed;
};

/// Every matching member, or one representative (the canonical digraph)
/// per isomorphism class; sorted by digraph6.
inline SearchResult search(const SearchQuery& q) {
  const auto start = std::chrono::steady_clock::now();
  const Enumerator en(q.cls, q.order);
  const auto preds = normalize_predicates(q.predicates);
  const auto parts = en.parts();
  const std::size_t shards = std::max<std::size_t>(1, q.shards);
  std::vector<std::map<std::string, std::uint64_t>> found(shards);
  std::vector<std::uint64_t> labeled(shards, 0);
  run_sharded(en.count(), shards, [&](std::size_t s, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Digraph d = en.member(i);
      if (!matches(d, preds)) continue;
      ++labeled[s];
      const Digraph rep = q.dedup == Dedup::kCanonical
                              ? canonical_digraph(d, parts ? &*parts : nullptr)
                              : d;
      ++found[s][to_digraph6(rep)];
    }
  });
  std::map<std::string, std::uint64_t> merged;
  SearchResult out;
  for (std::size_t s = 0; s < shards; ++s) {
    for (const auto& [key, count] : found[s]) merged[key] += count;
    out.labeled_matches += labeled[s];
  }
  for (const auto& [key, count] : merged) {
    if (q.limit != 0 && out.matches.size() >= q.limit) break;
    out.matches.push_back({key, compute_metrics(from_digraph6(key)), count});
  }
  out.scanned = en.count();
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive verification

struct ExhaustiveResult {
  TheoremId theorem = TheoremId::kProximityBounds;
  std::uint64_t scanned = 0;
  std::uint64_t checked = 0;
  std::uint64_t inconsistent = 0;
  /// Per equality-case label: instances where it was observed / predicted.
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> case_counts;
  /// First inconsistencies by enumeration index, capped.
  std::vector<VerificationReport> counterexamples;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return inconsistent == 0; }
};

/// Runs the verifier on every member meeting its preconditions.
inline ExhaustiveResult exhaustive_verify(TheoremId id, DigraphClass cls, ClassOrder order,
                                          std::size_t shards = 1,
                                          std::size_t max_counterexamples = 16) {
  if (id == TheoremId::kDigraphCounterexamples)
    throw Error("sec5-facts is checked per family, not by enumeration");
  const auto start = std::chrono::steady_clock::now();
  const Enumerator en(cls, order);
  shards = std::max<std::size_t>(1, shards);
  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t inconsistent = 0;
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> case_counts;
    std::vector<std::pair<std::uint64_t, VerificationReport>> bad;
  };
  std::vector<Partial> partial(shards);
  run_sharded(en.count(), shards, [&](std::size_t s, std::uint64_t lo, std::uint64_t hi) {
    auto& p = partial[s];
    for (std::uint64_t i = lo; i < hi; ++i) {
      Digraph d = en.member(i);
      // Most members fail strength; skip the full analysis for them.
      if (id != TheoremId::kMaxScoreKing && !matches(d, std::array{Predicate::kStrong})) continue;
      const Instance in(std::move(d));
      if (precondition_failure(id, in)) continue;
      auto rep = verify(id, in);
      ++p.checked;
      for (const auto& c : rep.cases) {
        auto& counts = p.case_counts[c.label];
        counts.first += c.observed ? 1 : 0;
        counts.second += c.predicted ? 1 : 0;
      }
      if (!rep.consistent()) {
        ++p.inconsistent;
        if (p.bad.size() < max_counterexamples) p.bad.emplace_back(i, std::move(rep));
      }
    }
  });
  ExhaustiveResult out;
  out.theorem = id;
  out.scanned = en.count();
  std::vector<std::pair<std::uint64_t, VerificationReport>> bad;
  for (auto& p : partial) {
    out.checked += p.checked;
    out.inconsistent += p.inconsistent;
    for (const auto& [label, counts] : p.case_counts) {
      out.case_counts[label].first += counts.first;
      out.case_counts[label].second += counts.second;
    }
    for (auto& b : p.bad) bad.push_back(std::move(b));
  }
  std::sort(bad.begin(), bad.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& b : bad) {
    if (out.counterexamples.size() >= max_counterexamples) break;
    out.counterexamples.push_back(std::move(b.second));
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

// ---------------------------------------------------------------------------
// Degree-constrained randomized search for graphs above the ceilings.

/// One random simple graph with the given labeled degree sequence, or
/// nullopt when the randomized greedy pairing dead-ends.
///
/// Repeatedly takes the vertex with the largest remaining degree (random
/// tie-break) and joins it to a uniformly random admissible partner.
template <typename Rng>
std::optional<Digraph> random_graph_with_degrees(std::span<const std::size_t> degrees, Rng& rng) {
  const std::size_t n = degrees.size();
  std::vector<std::size_t> left(degrees.begin(), degrees.end());
  DigraphBuilder b(n);
  std::vector<Vertex> cand;
  while (true) {
    std::size_t best = 0;
    cand.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (left[v] > best) {
        best = left[v];
        cand.assign(1, v);
      } else if (left[v] == best && best > 0) {
        cand.push_back(v);
      }
    }
    if (best == 0) break;
    const Vertex u = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
    cand.clear();
    for (Vertex v = 0; v < n; ++v)
      if (v != u && left[v] > 0 && !b.has_arc(u, v)) cand.push_back(v);
    if (cand.size() < 1) return std::nullopt;
    const Vertex v = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
    b.add_arc(u, v);
    b.add_arc(v, u);
    --left[u];
    --left[v];
  }
  return b.build();
}

struct RandomSearchQuery {
  std::vector<std::size_t> degrees;
  std::vector<Predicate> predicates;
  Dedup dedup = Dedup::kCanonical;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::size_t shards = 1;
  /// Stop early once a member isomorphic to this graph is found. The
  /// reported hit index is the smallest such iteration, so it does not
  /// depend on sharding.
  std::optional<Digraph> target;
};

struct RandomSearchResult {
  SearchResult result;
  std::optional<std::uint64_t> first_target_hit;
};

/// Sample i draws from an RNG seeded with (seed, i), so the outcome is
/// reproducible and independent of the shard count.
inline RandomSearchResult random_search(const RandomSearchQuery& q) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t shards = std::max<std::size_t>(1, q.shards);
  const auto preds = normalize_predicates(q.predicates);
  std::optional<CanonicalForm> target_form;
  if (q.target) target_form = canonical_form(*q.target);
  std::atomic<std::uint64_t> hit_bound{q.iterations};
  std::vector<std::map<std::string, std::uint64_t>> found(shards);
  std::vector<std::uint64_t> labeled(shards, 0);
  std::vector<std::optional<std::uint64_t>> hits(shards);
  std::vector<std::vector<std::pair<std::uint64_t, std::string>>> hit_log(shards);
  // Samples are assigned round-robin so every shard works at low indices.
  run_sharded(shards, shards, [&](std::size_t s, std::uint64_t, std::uint64_t) {
    for (std::uint64_t i = s; i < q.iterations; i += shards) {
      if (i >= hit_bound.load(std::memory_order_relaxed)) break;
      std::seed_seq seq{static_cast<std::uint32_t>(q.seed), static_cast<std::uint32_t>(q.seed >> 32),
                        static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
      std::mt19937_64 rng(seq);
      auto g = random_graph_with_degrees(q.degrees, rng);
      if (!g) continue;
      if (!matches(*g, preds)) continue;
      ++labeled[s];
      const auto lab = canonical_labeling(*g);
      const Digraph rep = q.dedup == Dedup::kCanonical ? permute(*g, lab.position) : *g;
      hit_log[s].emplace_back(i, to_digraph6(rep));
      if (target_form && lab.form == *target_form) {
        hits[s] = i;
        std::uint64_t cur = hit_bound.load();
        while (i + 1 < cur && !hit_bound.compare_exchange_weak(cur, i + 1)) {}
        break;
      }
    }
  });
  RandomSearchResult out;
  for (const auto& h : hits)
    if (h && (!out.first_target_hit || *h < *out.first_target_hit)) out.first_target_hit = h;
  // Keep only samples below the global stopping point.
  const std::uint64_t stop = out.first_target_hit ? *out.first_target_hit + 1 : q.iterations;
  std::map<std::string, std::uint64_t> merged;
  for (std::size_t s = 0; s < shards; ++s) {
    for (const auto& [i, key] : hit_log[s]) {
      if (i >= stop) continue;
      ++merged[key];
      ++out.result.labeled_matches;
    }
  }
  for (const auto& [key, count] : merged)
    out.result.matches.push_back({key, compute_metrics(from_digraph6(key)), count});
  out.result.scanned = stop;
  out.result.seed = q.seed;
  out.result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace dprox

#endif  // DPROX_SEARCH_HPP
