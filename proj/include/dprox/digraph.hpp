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

#ifndef DPROX_DIGRAPH_HPP
#define DPROX_DIGRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dprox {

using Vertex = std::uint32_t;
using Word = std::uint64_t;
using Arc = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kWordBits = 64;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace bits {

inline constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline std::size_t count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

/// Calls fn(i) for every set bit i, ascending.
template <typename Fn>
void for_each(std::span<const Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word word = row[w];
    while (word != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(word));
      fn(static_cast<Vertex>(w * kWordBits + b));
      word &= word - 1;
    }
  }
}

}  // namespace bits

/// A labeled digraph on vertices 0..n-1 without loops or parallel arcs.
///
/// Out- and in-adjacency are both stored as dense word-packed bit rows.
/// Values are immutable once built; use DigraphBuilder to construct one.
/// Undirected graphs are symmetric digraphs.
class Digraph {
 public:
  Digraph() = default;

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  bool has_arc(Vertex u, Vertex v) const {
    return bits::test(out_row(u), v);
  }

  std::span<const Word> out_row(Vertex u) const {
    return {out_.data() + static_cast<std::size_t>(u) * words_, words_};
  }
  std::span<const Word> in_row(Vertex u) const {
    return {in_.data() + static_cast<std::size_t>(u) * words_, words_};
  }

  std::size_t out_degree(Vertex u) const { return bits::count(out_row(u)); }
  std::size_t in_degree(Vertex u) const { return bits::count(in_row(u)); }

  std::vector<Vertex> out_neighbors(Vertex u) const {
    std::vector<Vertex> out;
    bits::for_each(out_row(u), [&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// All arcs in row-major order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      bits::for_each(out_row(u), [&](Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class DigraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> out_;
  std::vector<Word> in_;
};

/// Accumulates arcs, then freezes them into a Digraph.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n)
      : n_(n), words_(bits::words_for(n)), out_(n * words_, 0) {}

  std::size_t order() const { return n_; }

  /// Adds (u,v). Returns false when the arc was already present.
  bool add_arc(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) {
      std::ostringstream msg;
      msg << "arc (" << u << "," << v << ") has a label outside 0.." << n_ - 1;
      throw Error(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "arc (" << u << "," << v << ") is a loop";
      throw Error(msg.str());
    }
    std::span<Word> row{out_.data() + std::size_t{u} * words_, words_};
    if (bits::test(row, v)) return false;
    bits::set(row, v);
    ++m_;
    return true;
  }

  bool has_arc(Vertex u, Vertex v) const {
    return bits::test({out_.data() + std::size_t{u} * words_, words_}, v);
  }

  Digraph build() const {
    Digraph d;
    d.n_ = n_;
    d.m_ = m_;
    d.words_ = words_;
    d.out_ = out_;
    d.in_.assign(out_.size(), 0);
    for (std::size_t u = 0; u < n_; ++u) {
      bits::for_each(std::span<const Word>{out_.data() + u * words_, words_},
                     [&](Vertex v) {
                       bits::set({d.in_.data() + std::size_t{v} * words_, words_},
                                 u);
                     });
    }
    return d;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::size_t m_ = 0;
  std::vector<Word> out_;
};

struct DegreeSummary {
  std::vector<std::size_t> out_degrees;
  std::vector<std::size_t> in_degrees;
  std::size_t max_out = 0;
  std::size_t min_out = 0;
  std::size_t max_in = 0;
  std::size_t min_in = 0;
  std::size_t max_semi = 0;
  std::size_t min_semi = 0;
};

/// Disjoint vertex sets covering V; each part sorted ascending.
struct PartiteStructure {
  std::vector<std::vector<Vertex>> parts;

  /// Index of the part containing v.
  std::size_t part_of(Vertex v) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (std::binary_search(parts[i].begin(), parts[i].end(), v)) return i;
    throw Error("vertex not covered by partite structure");
  }
};

/// Duplicates collapse to a single arc.
inline Digraph from_edge_list(std::size_t n, std::span<const Arc> pairs) {
  if (n == 0) throw Error("a digraph needs at least one vertex");
  DigraphBuilder b(n);
  for (const auto& [u, v] : pairs) b.add_arc(u, v);
  return b.build();
}

inline Digraph from_edge_list(std::size_t n, std::initializer_list<Arc> pairs) {
  return from_edge_list(n, std::span<const Arc>(pairs.begin(), pairs.size()));
}

/// Each edge {u,v} contributes both (u,v) and (v,u).
inline Digraph from_undirected_edge_list(std::size_t n,
                                         std::span<const Arc> edges) {
  if (n == 0) throw Error("a digraph needs at least one vertex");
  DigraphBuilder b(n);
  for (const auto& [u, v] : edges) {
    b.add_arc(u, v);
    b.add_arc(v, u);
  }
  return b.build();
}

inline Digraph from_undirected_edge_list(std::size_t n,
                                         std::initializer_list<Arc> edges) {
  return from_undirected_edge_list(
      n, std::span<const Arc>(edges.begin(), edges.size()));
}

namespace detail {

// Vertices reachable from `source` following out-rows (or in-rows).
inline std::vector<Word> reach(const Digraph& d, Vertex source, bool forward) {
  const std::size_t w = d.words_per_row();
  std::vector<Word> seen(w, 0), frontier(w, 0), next(w, 0);
  bits::set(seen, source);
  bits::set(frontier, source);
  bool grew = true;
  while (grew) {
    std::fill(next.begin(), next.end(), 0);
    bits::for_each(frontier, [&](Vertex u) {
      auto row = forward ? d.out_row(u) : d.in_row(u);
      for (std::size_t i = 0; i < w; ++i) next[i] |= row[i];
    });
    grew = false;
    for (std::size_t i = 0; i < w; ++i) {
      next[i] &= ~seen[i];
      seen[i] |= next[i];
      grew = grew || next[i] != 0;
    }
    std::swap(frontier, next);
  }
  return seen;
}

}  // namespace detail

/// True iff every ordered pair is joined by a dipath. One vertex is strong.
inline bool is_strong(const Digraph& d) {
  if (d.order() <= 1) return true;
  // Cheap necessary condition first.
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) == 0 || d.in_degree(v) == 0) return false;
  return bits::count(detail::reach(d, 0, true)) == d.order() &&
         bits::count(detail::reach(d, 0, false)) == d.order();
}

/// Some ordered pair (u,v) with no (u,v)-dipath, or nullopt if strong.
inline std::optional<Arc> unreachable_pair(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    auto seen = detail::reach(d, u, true);
    for (Vertex v = 0; v < d.order(); ++v)
      if (!bits::test(seen, v)) return Arc{u, v};
  }
  return std::nullopt;
}

inline bool is_symmetric(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    auto o = d.out_row(u);
    auto i = d.in_row(u);
    if (!std::equal(o.begin(), o.end(), i.begin())) return false;
  }
  return true;
}

inline bool is_complete(const Digraph& d) {
  return d.size() == d.order() * (d.order() - 1);
}

inline Digraph complement(const Digraph& d) {
  DigraphBuilder b(d.order());
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = 0; v < d.order(); ++v)
      if (u != v && !d.has_arc(u, v)) b.add_arc(u, v);
  return b.build();
}

inline Digraph reverse(const Digraph& d) {
  DigraphBuilder b(d.order());
  for (const auto& [u, v] : d.arcs()) b.add_arc(v, u);
  return b.build();
}

/// Relabels vertex v as perm[v].
inline Digraph permute(const Digraph& d, std::span<const Vertex> perm) {
  if (perm.size() != d.order()) throw Error("permutation size mismatch");
  DigraphBuilder b(d.order());
  for (const auto& [u, v] : d.arcs()) b.add_arc(perm[u], perm[v]);
  return b.build();
}

inline DegreeSummary degree_summary(const Digraph& d) {
  DegreeSummary s;
  const std::size_t n = d.order();
  s.out_degrees.resize(n);
  s.in_degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    s.out_degrees[v] = d.out_degree(v);
    s.in_degrees[v] = d.in_degree(v);
  }
  if (n == 0) return s;
  auto [omin, omax] = std::minmax_element(s.out_degrees.begin(), s.out_degrees.end());
  auto [imin, imax] = std::minmax_element(s.in_degrees.begin(), s.in_degrees.end());
  s.min_out = *omin;
  s.max_out = *omax;
  s.min_in = *imin;
  s.max_in = *imax;
  s.min_semi = std::min(s.min_out, s.min_in);
  s.max_semi = std::max(s.max_out, s.max_in);
  return s;
}

/// delta^0 == Delta^0.
inline bool is_regular(const Digraph& d) {
  const auto s = degree_summary(d);
  return s.min_semi == s.max_semi;
}

/// Every unordered pair carries exactly one of its two arcs.
inline bool is_tournament(const Digraph& d) {
  const std::size_t n = d.order();
  if (d.size() != n * (n - 1) / 2) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
  return true;
}

/// Partition {A,B} if d orients a complete bipartite graph, else nullopt.
///
/// Parts are the components of the non-adjacency relation, ordered by
/// (size, smallest label). A single vertex has no bipartition.
inline std::optional<PartiteStructure> bipartite_tournament_structure(
    const Digraph& d) {
  const std::size_t n = d.order();
  if (n < 2) return std::nullopt;
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || comp[v] >= 0) continue;
        if (!d.has_arc(u, v) && !d.has_arc(v, u)) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp != 2) return std::nullopt;
  PartiteStructure ps;
  ps.parts.resize(2);
  for (Vertex v = 0; v < n; ++v) ps.parts[static_cast<std::size_t>(comp[v])].push_back(v);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool a = d.has_arc(u, v), b = d.has_arc(v, u);
      if (comp[u] == comp[v]) {
        if (a || b) return std::nullopt;
      } else if (a == b) {
        return std::nullopt;
      }
    }
  }
  std::sort(ps.parts.begin(), ps.parts.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
  return ps;
}

/// Replaces every vertex x by t independent copies x*t+0..x*t+t-1.
inline Digraph blow_up(const Digraph& d, std::size_t t) {
  if (t == 0) throw Error("blow-up factor must be positive");
  DigraphBuilder b(d.order() * t);
  for (const auto& [x, y] : d.arcs())
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        b.add_arc(static_cast<Vertex>(x * t + i), static_cast<Vertex>(y * t + j));
  return b.build();
}

}  // namespace dprox

#endif  // DPROX_DIGRAPH_HPP
