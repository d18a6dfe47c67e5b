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

// Distance invariants of digraphs: BFS profiles, distance degree sequences,
// vertex distance sums, proximity, remoteness, radius and diameter.
//
// Everything here is integer or exact-rational arithmetic. Average distances
// share the denominator n-1, so comparisons reduce to comparing sigma.

#ifndef DPROX_DISTANCE_HPP
#define DPROX_DISTANCE_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dprox/digraph.hpp"

namespace dprox {

using Rational = boost::rational<std::int64_t>;

/// Fixed-point rendering with `places` digits, rounded half away from zero.
inline std::string to_decimal(const Rational& r, int places = 6) {
  std::int64_t num = r.numerator(), den = r.denominator();
  const bool neg = num < 0;
  if (neg) num = -num;
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // num*scale fits for the magnitudes produced here (n well below 10^6).
  std::int64_t scaled = (num * scale * 2 + den) / (2 * den);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  std::string out = (neg && scaled != 0 ? "-" : "") + std::to_string(scaled / scale);
  if (places > 0) out += "." + frac;
  return out;
}

class NotStrongError : public Error {
 public:
  NotStrongError(Vertex from, Vertex to)
      : Error("digraph is not strong: no dipath from " + std::to_string(from) +
              " to " + std::to_string(to)),
        pair_{from, to} {}
  Arc pair() const { return pair_; }

 private:
  Arc pair_;
};

/// BFS output for one source vertex.
struct DistanceProfile {
  Vertex source = 0;
  /// nullopt marks an unreachable vertex.
  std::vector<std::optional<std::uint32_t>> dist;
  /// (n_0, n_1, ..., n_ecc) counted over reachable vertices.
  std::vector<std::uint32_t> distance_degree;
  bool all_reachable = false;
  /// Defined only when every vertex is reachable.
  std::optional<std::uint64_t> sigma;
  std::optional<std::uint32_t> ecc;
};

inline DistanceProfile bfs_profile(const Digraph& d, Vertex u) {
  const std::size_t n = d.order();
  if (u >= n) throw Error("source vertex out of range");
  DistanceProfile p;
  p.source = u;
  p.dist.assign(n, std::nullopt);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(u);
  p.dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const std::uint32_t dx = *p.dist[x];
    if (p.distance_degree.size() <= dx) p.distance_degree.push_back(0);
    ++p.distance_degree[dx];
    bits::for_each(d.out_row(x), [&](Vertex y) {
      if (!p.dist[y]) {
        p.dist[y] = dx + 1;
        queue.push_back(y);
      }
    });
  }
  p.all_reachable = queue.size() == n;
  if (p.all_reachable) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < p.distance_degree.size(); ++i)
      s += i * p.distance_degree[i];
    p.sigma = s;
    p.ecc = static_cast<std::uint32_t>(p.distance_degree.size() - 1);
  }
  return p;
}

/// g(X) = sum of i * x_i.
inline std::int64_t g_of(std::span<const std::int64_t> x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<std::int64_t>(i) * x[i];
  return s;
}

inline std::int64_t g_of(std::span<const std::uint32_t> x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<std::int64_t>(i) * x[i];
  return s;
}

/// sigma and ecc of every vertex of a strong digraph, from one layered
/// bitset BFS per source.
struct DistanceSums {
  std::vector<std::uint64_t> sigma;
  std::vector<std::uint32_t> ecc;
};

/// Returns nullopt when some vertex cannot reach every other vertex.
inline std::optional<DistanceSums> distance_sums(const Digraph& d) {
  const std::size_t n = d.order();
  const std::size_t w = d.words_per_row();
  DistanceSums out;
  out.sigma.resize(n);
  out.ecc.resize(n);
  std::vector<Word> seen(w), frontier(w), next(w);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    bits::set(seen, u);
    bits::set(frontier, u);
    std::size_t reached = 1;
    std::uint64_t sigma = 0;
    std::uint32_t level = 0;
    while (reached < n) {
      std::fill(next.begin(), next.end(), 0);
      bits::for_each(frontier, [&](Vertex x) {
        auto row = d.out_row(x);
        for (std::size_t i = 0; i < w; ++i) next[i] |= row[i];
      });
      std::size_t layer = 0;
      for (std::size_t i = 0; i < w; ++i) {
        next[i] &= ~seen[i];
        seen[i] |= next[i];
        layer += static_cast<std::size_t>(std::popcount(next[i]));
      }
      if (layer == 0) return std::nullopt;
      ++level;
      reached += layer;
      sigma += static_cast<std::uint64_t>(level) * layer;
      std::swap(frontier, next);
    }
    out.sigma[u] = sigma;
    out.ecc[u] = level;
  }
  return out;
}

inline DistanceSums require_distance_sums(const Digraph& d) {
  if (auto s = distance_sums(d)) return *std::move(s);
  const auto pair = unreachable_pair(d);
  throw NotStrongError(pair->first, pair->second);
}

struct ProximityRemoteness {
  Rational pi;
  Rational rho;
  /// Smallest labels attaining min and max sigma.
  Vertex prox_witness = 0;
  Vertex rem_witness = 0;
};

inline ProximityRemoteness proximity_remoteness(const Digraph& d,
                                                const DistanceSums& sums) {
  const std::size_t n = d.order();
  if (n < 2) throw Error("proximity and remoteness need at least two vertices");
  ProximityRemoteness r;
  for (Vertex v = 1; v < n; ++v) {
    if (sums.sigma[v] < sums.sigma[r.prox_witness]) r.prox_witness = v;
    if (sums.sigma[v] > sums.sigma[r.rem_witness]) r.rem_witness = v;
  }
  const auto den = static_cast<std::int64_t>(n - 1);
  r.pi = Rational(static_cast<std::int64_t>(sums.sigma[r.prox_witness]), den);
  r.rho = Rational(static_cast<std::int64_t>(sums.sigma[r.rem_witness]), den);
  return r;
}

/// Throws NotStrongError naming an unreachable pair.
inline ProximityRemoteness proximity_remoteness(const Digraph& d) {
  if (d.order() < 2) throw Error("proximity and remoteness need at least two vertices");
  return proximity_remoteness(d, require_distance_sums(d));
}

struct RadiusDiameter {
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
};

inline RadiusDiameter radius_diameter(const DistanceSums& sums) {
  RadiusDiameter r;
  if (sums.ecc.empty()) return r;
  r.radius = *std::min_element(sums.ecc.begin(), sums.ecc.end());
  r.diameter = *std::max_element(sums.ecc.begin(), sums.ecc.end());
  return r;
}

inline RadiusDiameter radius_diameter(const Digraph& d) {
  return radius_diameter(require_distance_sums(d));
}

/// Every vertex lies within distance p of u.
inline bool is_p_king(const Digraph& d, Vertex u, std::uint32_t p) {
  const auto prof = bfs_profile(d, u);
  return prof.all_reachable && *prof.ecc <= p;
}

/// Whole-digraph invariants. Distance fields are empty for non-strong input.
struct MetricsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_strong = false;
  bool is_regular = false;
  bool is_tournament = false;
  bool is_symmetric = false;
  DegreeSummary degrees;
  std::optional<Rational> pi;
  std::optional<Rational> rho;
  std::optional<Vertex> prox_witness;
  std::optional<Vertex> rem_witness;
  std::optional<std::uint32_t> radius;
  std::optional<std::uint32_t> diameter;
  std::vector<std::uint64_t> sigma;
  std::vector<std::uint32_t> ecc;
  std::optional<Arc> unreachable;

  bool pi_equals_rho() const { return pi && rho && *pi == *rho; }
};

inline MetricsReport compute_metrics(const Digraph& d) {
  MetricsReport r;
  r.n = d.order();
  r.m = d.size();
  r.degrees = degree_summary(d);
  r.is_regular = r.degrees.min_semi == r.degrees.max_semi;
  r.is_tournament = is_tournament(d);
  r.is_symmetric = is_symmetric(d);
  auto sums = distance_sums(d);
  r.is_strong = sums.has_value();
  if (!sums) {
    r.unreachable = unreachable_pair(d);
    return r;
  }
  r.sigma = sums->sigma;
  r.ecc = sums->ecc;
  const auto rd = radius_diameter(*sums);
  r.radius = rd.radius;
  r.diameter = rd.diameter;
  if (r.n >= 2) {
    const auto pr = proximity_remoteness(d, *sums);
    r.pi = pr.pi;
    r.rho = pr.rho;
    r.prox_witness = pr.prox_witness;
    r.rem_witness = pr.rem_witness;
  }
  return r;
}

}  // namespace dprox

#endif  // DPROX_DISTANCE_HPP
