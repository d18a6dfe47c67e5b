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

// Structure of bipartite tournaments T[A,B]: good/bad classification,
// out-neighbourhood classes M(v) with sizes mu(v), the closed-form distance
// sum of a good strong instance, and the balance criteria for pi == rho.
//
// Part A is parts[0] of bipartite_tournament_structure (the smaller part,
// or the one holding vertex 0 on a tie); |A| = a, |B| = b.

#ifndef DPROX_BIPARTITE_HPP
#define DPROX_BIPARTITE_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "dprox/digraph.hpp"
#include "dprox/distance.hpp"

namespace dprox {

/// Vertices of one part sharing an identical out-neighbourhood.
struct NeighborhoodClass {
  Vertex representative = 0;  // smallest member
  std::vector<Vertex> members;
  std::size_t mu() const { return members.size(); }
};

struct GoodBadResult {
  bool good = true;
  /// (u,v) with N+(u) a proper subset of N+(v), lexicographically smallest.
  std::optional<Arc> bad_witness;
};

struct BipartiteVertexRow {
  Vertex vertex = 0;
  std::size_t part = 0;  // 0 = A, 1 = B
  std::size_t out_degree = 0;
  std::size_t mu = 0;
  std::optional<std::uint64_t> sigma;  // BFS value
};

struct BipartiteReport {
  PartiteStructure structure;
  bool strong = false;
  bool good = false;
  std::optional<Arc> bad_witness;
  std::vector<BipartiteVertexRow> per_vertex;
  /// 2(mu - d+) + |opposite part|, per side, when constant on that side.
  std::optional<long long> constant_a;
  std::optional<long long> constant_b;
  /// Both sides share one constant.
  std::optional<long long> constant_c;
  bool pi_equals_rho = false;
  /// Good and a common constant exists.
  bool criterion_predicts_equality = false;
  /// Pairwise mu - d+ relations, checked only when pi == rho.
  bool pairwise_relations_hold = true;
};

namespace detail {

inline PartiteStructure require_bipartite(const Digraph& t) {
  auto ps = bipartite_tournament_structure(t);
  if (!ps) throw Error("input is not a bipartite tournament");
  return *std::move(ps);
}

inline bool row_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

}  // namespace detail

inline GoodBadResult classify_good_bad(const Digraph& t, const PartiteStructure& ps) {
  GoodBadResult r;
  std::vector<std::pair<Vertex, std::size_t>> order;
  for (std::size_t p = 0; p < ps.parts.size(); ++p)
    for (Vertex v : ps.parts[p]) order.emplace_back(v, p);
  std::sort(order.begin(), order.end());
  for (const auto& [u, pu] : order) {
    for (Vertex v : ps.parts[pu]) {
      if (u == v) continue;
      auto ru = t.out_row(u), rv = t.out_row(v);
      if (detail::row_subset(ru, rv) && !std::equal(ru.begin(), ru.end(), rv.begin())) {
        if (!r.bad_witness || Arc{u, v} < *r.bad_witness) r.bad_witness = Arc{u, v};
      }
    }
    if (r.bad_witness) break;  // u ascending, so the first u found is minimal
  }
  r.good = !r.bad_witness.has_value();
  return r;
}

inline GoodBadResult classify_good_bad(const Digraph& t) {
  return classify_good_bad(t, detail::require_bipartite(t));
}

/// Classes are grouped within each part, parts in structure order, classes
/// by smallest member.
inline std::vector<NeighborhoodClass> neighborhood_classes(const Digraph& t,
                                                           const PartiteStructure& ps) {
  std::vector<NeighborhoodClass> out;
  for (const auto& part : ps.parts) {
    std::map<std::vector<Word>, std::size_t> index;
    const std::size_t first = out.size();
    for (Vertex v : part) {
      auto row = t.out_row(v);
      std::vector<Word> key(row.begin(), row.end());
      auto [it, inserted] = index.try_emplace(std::move(key), out.size());
      if (inserted) out.push_back({v, {}});
      out[it->second].members.push_back(v);
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
              [](const auto& x, const auto& y) { return x.representative < y.representative; });
  }
  return out;
}

inline std::vector<NeighborhoodClass> neighborhood_classes(const Digraph& t) {
  return neighborhood_classes(t, detail::require_bipartite(t));
}

/// mu(v) for every vertex.
inline std::vector<std::size_t> mu_values(const Digraph& t, const PartiteStructure& ps) {
  std::vector<std::size_t> mu(t.order(), 0);
  for (const auto& cls : neighborhood_classes(t, ps))
    for (Vertex v : cls.members) mu[v] = cls.mu();
  return mu;
}

/// 2(mu - d+) + 2|own part| + 3|other part| - 4.
inline std::int64_t sigma_formula_value(std::size_t own_size, std::size_t other_size,
                                        std::size_t mu, std::size_t out_degree) {
  return 2 * (static_cast<std::int64_t>(mu) - static_cast<std::int64_t>(out_degree)) +
         2 * static_cast<std::int64_t>(own_size) + 3 * static_cast<std::int64_t>(other_size) - 4;
}

/// Closed-form sigma of v in a good strong bipartite tournament.
///
/// The formula presumes v is a 4-king; that is checked by BFS rather than
/// assumed, and a violation throws.
inline std::int64_t sigma_by_formula(const Digraph& t, const PartiteStructure& ps,
                                     Vertex v) {
  if (!classify_good_bad(t, ps).good) throw Error("sigma formula needs a good bipartite tournament");
  if (!is_strong(t)) throw Error("sigma formula needs a strong bipartite tournament");
  if (!is_p_king(t, v, 4))
    throw Error("vertex " + std::to_string(v) + " is not a 4-king");
  const std::size_t own = ps.part_of(v);
  return sigma_formula_value(ps.parts[own].size(), ps.parts[1 - own].size(),
                             mu_values(t, ps)[v], t.out_degree(v));
}

inline std::int64_t sigma_by_formula(const Digraph& t, Vertex v) {
  return sigma_by_formula(t, detail::require_bipartite(t), v);
}

/// Full report; pi_equals_rho is taken from the exact metrics.
inline BipartiteReport check_equality_criterion(const Digraph& t) {
  BipartiteReport r;
  r.structure = detail::require_bipartite(t);
  const auto& ps = r.structure;
  const auto gb = classify_good_bad(t, ps);
  r.good = gb.good;
  r.bad_witness = gb.bad_witness;
  const auto sums = distance_sums(t);
  r.strong = sums.has_value();
  if (!r.strong) {
    const auto pair = unreachable_pair(t);
    throw NotStrongError(pair->first, pair->second);
  }
  const auto mu = mu_values(t, ps);
  for (std::size_t p = 0; p < 2; ++p)
    for (Vertex v : ps.parts[p])
      r.per_vertex.push_back({v, p, t.out_degree(v), mu[v], sums->sigma[v]});
  std::sort(r.per_vertex.begin(), r.per_vertex.end(),
            [](const auto& x, const auto& y) { return x.vertex < y.vertex; });

  std::array<std::optional<long long>, 2> side;
  std::array<bool, 2> constant = {true, true};
  for (const auto& row : r.per_vertex) {
    const auto other = static_cast<long long>(ps.parts[1 - row.part].size());
    const long long c = 2 * (static_cast<long long>(row.mu) - static_cast<long long>(row.out_degree)) + other;
    if (!side[row.part]) side[row.part] = c;
    else if (*side[row.part] != c) constant[row.part] = false;
  }
  if (constant[0]) r.constant_a = side[0];
  if (constant[1]) r.constant_b = side[1];
  if (r.constant_a && r.constant_b && *r.constant_a == *r.constant_b) r.constant_c = r.constant_a;

  const auto pr = proximity_remoteness(t, *sums);
  r.pi_equals_rho = pr.pi == pr.rho;
  r.criterion_predicts_equality = r.good && r.constant_c.has_value();

  if (r.pi_equals_rho && r.good) {
    for (const auto& x : r.per_vertex) {
      for (const auto& y : r.per_vertex) {
        const long long dx = static_cast<long long>(x.mu) - static_cast<long long>(x.out_degree);
        const long long dy = static_cast<long long>(y.mu) - static_cast<long long>(y.out_degree);
        if (x.part == y.part) {
          if (dx != dy) r.pairwise_relations_hold = false;
        } else if (x.part == 0) {
          const auto a = static_cast<long long>(ps.parts[0].size());
          const auto b = static_cast<long long>(ps.parts[1].size());
          if (2 * dx + b != 2 * dy + a) r.pairwise_relations_hold = false;
        }
      }
    }
  }
  return r;
}

/// Degree condition for a good bipartite tournament whose classes all have
/// the same size: every A vertex has out-degree |B|/2 and every B vertex
/// out-degree |A|/2. Throws when mu is not constant or the input is bad.
inline bool check_cor_reg(const Digraph& t) {
  const auto ps = detail::require_bipartite(t);
  if (!classify_good_bad(t, ps).good) throw Error("degree criterion needs a good bipartite tournament");
  const auto mu = mu_values(t, ps);
  if (std::adjacent_find(mu.begin(), mu.end(), std::not_equal_to<>()) != mu.end())
    throw Error("degree criterion needs a constant class size mu");
  for (std::size_t p = 0; p < 2; ++p) {
    const std::size_t other = ps.parts[1 - p].size();
    for (Vertex v : ps.parts[p])
      if (2 * t.out_degree(v) != other) return false;
  }
  return true;
}

}  // namespace dprox

#endif  // DPROX_BIPARTITE_HPP
