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

// Canonical forms of small digraphs by exhaustive permutation search.
//
// The form is the lexicographically smallest adjacency bit string over all
// admissible relabelings. Bits are listed vertex-prefix first: for position
// k = 1..n-1 and i = 0..k-1 the pair x(i,k), x(k,i). With that order the
// bits among positions 0..k are fixed once those positions are assigned,
// which lets the search prune a branch as soon as its prefix exceeds the
// best string found so far.
//
// Admissible relabelings send vertices to positions sorted by the key
// (part, out-degree, in-degree). Isomorphisms preserve the key, so equal
// forms still mean isomorphic and vice versa. For bipartite classes the
// part is part of the key (part-respecting isomorphism); with equal part
// sizes both part orders are tried.

#ifndef DPROX_CANONICAL_HPP
#define DPROX_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "dprox/digraph.hpp"

namespace dprox {

inline constexpr std::size_t kCanonicalMaxOrder = 10;

struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
};

namespace detail {

class CanonicalSearch {
 public:
  CanonicalSearch(const Digraph& d, std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> keys)
      : d_(d), n_(d.order()), keys_(std::move(keys)) {
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return keys_[a] < keys_[b]; });
    assigned_.resize(n_);
    used_.assign(n_, false);
    cur_.assign(n_ * (n_ - (n_ > 0 ? 1 : 0)), 0);
  }

  void run() { descend(0, true); }

  const std::vector<std::uint8_t>& best() const { return best_; }
  const std::vector<Vertex>& best_assignment() const { return best_assigned_; }

 private:
  // `less` means the assigned prefix is already smaller than best_.
  void descend(std::size_t k, bool less) {
    if (k == n_) {
      if (less || best_.empty()) {
        best_ = cur_;
        best_assigned_ = assigned_;
        ++version_;
      }
      return;
    }
    const auto& want = keys_[order_[k]];
    const std::size_t off = k * (k - (k > 0 ? 1 : 0));
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || keys_[v] != want) continue;
      for (std::size_t i = 0; i < k; ++i) {
        cur_[off + 2 * i] = d_.has_arc(assigned_[i], v) ? 1 : 0;
        cur_[off + 2 * i + 1] = d_.has_arc(v, assigned_[i]) ? 1 : 0;
      }
      bool child_less = less || best_.empty();
      if (!child_less) {
        const auto cmp = std::lexicographical_compare_three_way(
            cur_.begin() + static_cast<std::ptrdiff_t>(off),
            cur_.begin() + static_cast<std::ptrdiff_t>(off + 2 * k),
            best_.begin() + static_cast<std::ptrdiff_t>(off),
            best_.begin() + static_cast<std::ptrdiff_t>(off + 2 * k));
        if (cmp > 0) continue;
        child_less = cmp < 0;
      }
      used_[v] = true;
      assigned_[k] = v;
      const auto before = version_;
      descend(k + 1, child_less);
      used_[v] = false;
      // A new best shares this node's prefix, so siblings compare as equal.
      if (version_ != before) less = false;
    }
  }

  const Digraph& d_;
  std::size_t n_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> keys_;
  std::vector<Vertex> order_;
  std::vector<Vertex> assigned_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
  std::vector<Vertex> best_assigned_;
  std::uint64_t version_ = 0;
};

inline CanonicalLabeling canonical_with_part_order(const Digraph& d,
                                                   const std::vector<std::size_t>& part_key) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> keys(d.order());
  for (Vertex v = 0; v < d.order(); ++v)
    keys[v] = {part_key[v], d.out_degree(v), d.in_degree(v)};
  CanonicalSearch search(d, std::move(keys));
  search.run();
  CanonicalLabeling out;
  out.form.n = d.order();
  out.form.bits = search.best();
  out.position.resize(d.order());
  const auto& a = search.best_assignment();
  for (std::size_t p = 0; p < a.size(); ++p) out.position[a[p]] = static_cast<Vertex>(p);
  return out;
}

}  // namespace detail

/// Throws when n exceeds kCanonicalMaxOrder.
inline CanonicalLabeling canonical_labeling(const Digraph& d,
                                            const PartiteStructure* parts = nullptr) {
  if (d.order() > kCanonicalMaxOrder)
    throw Error("canonical form supports n <= " + std::to_string(kCanonicalMaxOrder));
  std::vector<std::size_t> key(d.order(), 0);
  if (parts == nullptr) return detail::canonical_with_part_order(d, key);
  for (std::size_t p = 0; p < parts->parts.size(); ++p)
    for (Vertex v : parts->parts[p]) key[v] = p;
  auto best = detail::canonical_with_part_order(d, key);
  if (parts->parts.size() == 2 && parts->parts[0].size() == parts->parts[1].size()) {
    for (auto& k : key) k = 1 - k;
    auto swapped = detail::canonical_with_part_order(d, key);
    if (swapped.form < best.form) best = std::move(swapped);
  }
  return best;
}

inline CanonicalForm canonical_form(const Digraph& d, const PartiteStructure* parts = nullptr) {
  return canonical_labeling(d, parts).form;
}

/// The relabeled digraph whose adjacency is the canonical form.
inline Digraph canonical_digraph(const Digraph& d, const PartiteStructure* parts = nullptr) {
  const auto lab = canonical_labeling(d, parts);
  return permute(d, lab.position);
}

inline bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = degree_summary(a), db = degree_summary(b);
  std::vector<std::pair<std::size_t, std::size_t>> ka, kb;
  for (std::size_t v = 0; v < a.order(); ++v) {
    ka.emplace_back(da.out_degrees[v], da.in_degrees[v]);
    kb.emplace_back(db.out_degrees[v], db.in_degrees[v]);
  }
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dprox

#endif  // DPROX_CANONICAL_HPP
