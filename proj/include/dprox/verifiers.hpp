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

// Per-instance verdicts for the proximity/remoteness bounds and their
// equality characterizations.
//
// Each verifier checks its bounds on the exact metrics, then compares every
// observed equality against a prediction computed from structure alone
// (degrees, arc counts, Hamiltonian walks, isomorphism, neighbourhood
// classes). A report is consistent when all bounds hold and every
// prediction matches its observation.

#ifndef DPROX_VERIFIERS_HPP
#define DPROX_VERIFIERS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dprox/bipartite.hpp"
#include "dprox/canonical.hpp"
#include "dprox/constructions.hpp"
#include "dprox/digraph.hpp"
#include "dprox/distance.hpp"
#include "dprox/io.hpp"

namespace dprox {

enum class TheoremId {
  kProximityBounds,            // thm-2.1-pi
  kRemotenessBounds,           // thm-2.1-rho
  kRemotenessProximityGap,     // thm-2.2
  kMaxScoreKing,               // prop-3.1
  kTournamentProximity,        // thm-3.2-pi
  kTournamentRemoteness,       // thm-3.2-rho
  kTournamentBalance,          // thm-3.3
  kBadSeparates,               // lem-3.4
  kGoodFourKings,              // lem-3.5
  kSigmaFormula,               // lem-3.6
  kBalanceConstant,            // cor-3.7
  kUniformClassDegrees,        // cor-3.8
  kDigraphCounterexamples,     // sec5-facts
};

inline constexpr std::array<std::pair<TheoremId, std::string_view>, 13> kTheoremTokens = {{
    {TheoremId::kProximityBounds, "thm-2.1-pi"},
    {TheoremId::kRemotenessBounds, "thm-2.1-rho"},
    {TheoremId::kRemotenessProximityGap, "thm-2.2"},
    {TheoremId::kMaxScoreKing, "prop-3.1"},
    {TheoremId::kTournamentProximity, "thm-3.2-pi"},
    {TheoremId::kTournamentRemoteness, "thm-3.2-rho"},
    {TheoremId::kTournamentBalance, "thm-3.3"},
    {TheoremId::kBadSeparates, "lem-3.4"},
    {TheoremId::kGoodFourKings, "lem-3.5"},
    {TheoremId::kSigmaFormula, "lem-3.6"},
    {TheoremId::kBalanceConstant, "cor-3.7"},
    {TheoremId::kUniformClassDegrees, "cor-3.8"},
    {TheoremId::kDigraphCounterexamples, "sec5-facts"},
}};

inline std::string_view theorem_token(TheoremId id) {
  for (const auto& [t, tok] : kTheoremTokens)
    if (t == id) return tok;
  return "?";
}

/// Accepts the bare prefix of a split pair too: "thm-2.1" and "thm-3.2"
/// expand to both halves (see theorem_group).
inline std::optional<TheoremId> parse_theorem(std::string_view token) {
  for (const auto& [t, tok] : kTheoremTokens)
    if (tok == token) return t;
  return std::nullopt;
}

/// One or two ids: "thm-2.1" -> pi and rho parts, likewise "thm-3.2".
inline std::vector<TheoremId> theorem_group(std::string_view token) {
  if (token == "thm-2.1") return {TheoremId::kProximityBounds, TheoremId::kRemotenessBounds};
  if (token == "thm-3.2") return {TheoremId::kTournamentProximity, TheoremId::kTournamentRemoteness};
  if (auto id = parse_theorem(token)) return {*id};
  throw Error("unknown theorem id '" + std::string(token) + "'");
}

/// observed vs predicted for one characterization. An implication-only
/// case is consistent unless predicted holds and observed fails.
struct EqualityCase {
  std::string label;
  bool observed = false;
  bool predicted = false;
  bool implication_only = false;

  bool consistent() const {
    return implication_only ? (!predicted || observed) : observed == predicted;
  }
};

struct VerificationReport {
  TheoremId theorem = TheoremId::kProximityBounds;
  bool bound_holds = true;
  std::vector<EqualityCase> cases;
  std::vector<Vertex> witnesses;
  std::map<std::string, std::string> details;
  /// Certificate: the instance and its sigma table.
  std::string digraph6;
  std::vector<std::uint64_t> sigma;

  bool equality_observed() const {
    return std::any_of(cases.begin(), cases.end(), [](const auto& c) { return c.observed; });
  }
  bool equality_predicted() const {
    return std::any_of(cases.begin(), cases.end(), [](const auto& c) { return c.predicted; });
  }
  bool consistent() const {
    return bound_holds &&
           std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.consistent(); });
  }
};

/// Degrees, strength, distance sums and class structure of one digraph,
/// computed once and shared by every verifier.
class Instance {
 public:
  explicit Instance(Digraph d)
      : d_(std::move(d)),
        degrees_(degree_summary(d_)),
        sums_(distance_sums(d_)),
        tournament_(is_tournament(d_)),
        bipartite_(bipartite_tournament_structure(d_)) {
    if (sums_ && d_.order() >= 2) pr_ = proximity_remoteness(d_, *sums_);
  }

  const Digraph& digraph() const { return d_; }
  std::size_t n() const { return d_.order(); }
  const DegreeSummary& degrees() const { return degrees_; }
  bool strong() const { return sums_.has_value(); }
  bool tournament() const { return tournament_; }
  const std::optional<PartiteStructure>& bipartite() const { return bipartite_; }

  const DistanceSums& sums() const {
    if (!sums_) {
      const auto pair = unreachable_pair(d_);
      throw NotStrongError(pair->first, pair->second);
    }
    return *sums_;
  }
  const ProximityRemoteness& pr() const {
    if (!pr_) {
      sums();
      throw Error("proximity and remoteness need at least two vertices");
    }
    return *pr_;
  }

 private:
  Digraph d_;
  DegreeSummary degrees_;
  std::optional<DistanceSums> sums_;
  bool tournament_;
  std::optional<PartiteStructure> bipartite_;
  std::optional<ProximityRemoteness> pr_;
};

/// Hamiltonian dipath starting at `start` with no arc v_i v_j for j > i+1.
///
/// Such a path is forced: each vertex must have exactly one unvisited
/// out-neighbour, which is the next vertex.
inline std::optional<std::vector<Vertex>> shortcut_free_hamiltonian_path(const Digraph& d,
                                                                         Vertex start) {
  const std::size_t n = d.order();
  std::vector<bool> visited(n, false);
  std::vector<Vertex> path{start};
  visited[start] = true;
  while (path.size() < n) {
    std::optional<Vertex> next;
    bool ambiguous = false;
    bits::for_each(d.out_row(path.back()), [&](Vertex y) {
      if (visited[y]) return;
      if (next) ambiguous = true;
      next = y;
    });
    if (!next || ambiguous) return std::nullopt;
    visited[*next] = true;
    path.push_back(*next);
  }
  // The last vertex has no unvisited successors by construction.
  return path;
}

/// All shortcut-free Hamiltonian dipaths, one per admissible start.
inline std::vector<std::vector<Vertex>> shortcut_free_hamiltonian_paths(const Digraph& d) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < d.order(); ++s)
    if (auto p = shortcut_free_hamiltonian_path(d, s)) out.push_back(*std::move(p));
  return out;
}

/// n arcs, every semi-degree 1, strong.
inline bool is_dicycle_structural(const Digraph& d, const DegreeSummary& deg, bool strong) {
  return d.size() == d.order() && deg.min_semi == 1 && deg.max_semi == 1 && strong;
}

/// Every out-degree (n-1)/2.
inline bool is_regular_tournament(const Digraph& d, const DegreeSummary& deg) {
  const std::size_t n = d.order();
  if (n % 2 == 0) return false;
  return std::all_of(deg.out_degrees.begin(), deg.out_degrees.end(),
                     [&](std::size_t x) { return 2 * x == n - 1; });
}

/// n even and every out-degree n/2 or (n-2)/2.
inline bool is_almost_regular_tournament(const Digraph& d, const DegreeSummary& deg) {
  const std::size_t n = d.order();
  if (n % 2 != 0) return false;
  return std::all_of(deg.out_degrees.begin(), deg.out_degrees.end(),
                     [&](std::size_t x) { return 2 * x == n || 2 * x + 2 == n; });
}

/// Isomorphism with extremal_tournament(n). Canonical forms up to
/// kCanonicalMaxOrder; beyond that a tournament with a shortcut-free
/// Hamiltonian dipath is the extremal one by definition.
inline bool is_extremal_tournament(const Digraph& d) {
  const std::size_t n = d.order();
  if (n < 3 || !is_tournament(d)) return false;
  if (n <= kCanonicalMaxOrder) return are_isomorphic(d, extremal_tournament(n));
  return !shortcut_free_hamiltonian_paths(d).empty();
}

namespace detail {

inline VerificationReport start_report(TheoremId id, const Instance& in) {
  VerificationReport r;
  r.theorem = id;
  r.digraph6 = to_digraph6(in.digraph());
  if (in.strong()) r.sigma = in.sums().sigma;
  return r;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

inline void require_strong(const Instance& in) {
  if (!in.strong()) in.sums();  // throws NotStrongError with the pair
}

inline std::string show(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace detail

/// 1 <= pi <= n/2; pi == 1 iff some out-degree is n-1; pi == n/2 iff dicycle.
inline VerificationReport verify_proximity_bounds(const Instance& in) {
  detail::require_strong(in);
  detail::require(in.n() >= 3, "proximity bounds need n >= 3");
  auto r = detail::start_report(TheoremId::kProximityBounds, in);
  const auto n = static_cast<std::int64_t>(in.n());
  const Rational pi = in.pr().pi;
  r.bound_holds = Rational(1) <= pi && pi <= Rational(n, 2);
  r.cases.push_back({"pi == 1 <=> some vertex has out-degree n-1", pi == Rational(1),
                     in.degrees().max_out == in.n() - 1});
  r.cases.push_back({"pi == n/2 <=> dicycle", pi == Rational(n, 2),
                     is_dicycle_structural(in.digraph(), in.degrees(), in.strong())});
  r.witnesses = {in.pr().prox_witness};
  r.details["pi"] = detail::show(pi);
  return r;
}

/// 1 <= rho <= n/2; rho == 1 iff complete; rho == n/2 iff a shortcut-free
/// Hamiltonian dipath exists (equivalently some eccentricity is n-1).
inline VerificationReport verify_remoteness_bounds(const Instance& in) {
  detail::require_strong(in);
  detail::require(in.n() >= 3, "remoteness bounds need n >= 3");
  auto r = detail::start_report(TheoremId::kRemotenessBounds, in);
  const auto n = static_cast<std::int64_t>(in.n());
  const Rational rho = in.pr().rho;
  r.bound_holds = Rational(1) <= rho && rho <= Rational(n, 2);
  r.cases.push_back({"rho == 1 <=> complete digraph", rho == Rational(1), is_complete(in.digraph())});
  const auto paths = shortcut_free_hamiltonian_paths(in.digraph());
  r.cases.push_back({"rho == n/2 <=> shortcut-free Hamiltonian dipath", rho == Rational(n, 2),
                     !paths.empty()});
  if (!paths.empty()) r.witnesses = paths.front();
  r.details["rho"] = detail::show(rho);
  return r;
}

/// rho - pi <= n/2 - 1, with equality iff some shortcut-free Hamiltonian
/// dipath has an out-degree n-1 vertex among its last two vertices.
inline VerificationReport verify_remoteness_proximity_gap(const Instance& in) {
  detail::require_strong(in);
  detail::require(in.n() >= 2, "gap bound needs n >= 2");
  auto r = detail::start_report(TheoremId::kRemotenessProximityGap, in);
  const auto n = static_cast<std::int64_t>(in.n());
  const Rational gap = in.pr().rho - in.pr().pi;
  const Rational bound = Rational(n, 2) - 1;
  r.bound_holds = gap <= bound;
  bool predicted = false;
  for (const auto& path : shortcut_free_hamiltonian_paths(in.digraph())) {
    const Vertex a = path[in.n() - 2], b = path[in.n() - 1];
    if (in.degrees().out_degrees[a] == in.n() - 1 || in.degrees().out_degrees[b] == in.n() - 1) {
      predicted = true;
      r.witnesses = path;
      break;
    }
  }
  r.cases.push_back({"rho - pi == n/2 - 1 <=> shortcut-free Hamiltonian dipath ending near an "
                     "out-degree n-1 vertex",
                     gap == bound, predicted});
  r.details["rho_minus_pi"] = detail::show(gap);
  return r;
}

/// Every maximum-score vertex of a tournament is a 2-king.
inline VerificationReport verify_max_score_king(const Instance& in) {
  detail::require(in.tournament(), "input is not a tournament");
  auto r = detail::start_report(TheoremId::kMaxScoreKing, in);
  bool any_king = false;
  for (Vertex v = 0; v < in.n(); ++v) {
    const bool king = is_p_king(in.digraph(), v, 2);
    any_king = any_king || king;
    if (in.degrees().out_degrees[v] == in.degrees().max_out) {
      r.witnesses.push_back(v);
      if (!king) r.bound_holds = false;
    }
  }
  if (!any_king) r.bound_holds = false;
  r.details["max_out_degree"] = std::to_string(in.degrees().max_out);
  return r;
}

/// Tournament proximity: n/(n-1) <= pi <= 3/2 (n odd) or 3/2 - 1/(2(n-1)).
inline VerificationReport verify_tournament_proximity(const Instance& in) {
  detail::require(in.tournament(), "input is not a tournament");
  detail::require_strong(in);
  detail::require(in.n() >= 3, "tournament bounds need n >= 3");
  auto r = detail::start_report(TheoremId::kTournamentProximity, in);
  const auto n = static_cast<std::int64_t>(in.n());
  const Rational pi = in.pr().pi;
  const Rational lower(n, n - 1);
  const Rational upper = n % 2 == 1 ? Rational(3, 2) : Rational(3, 2) - Rational(1, 2 * (n - 1));
  r.bound_holds = lower <= pi && pi <= upper;
  r.cases.push_back({"pi == n/(n-1) <=> max out-degree n-2", pi == lower,
                     in.degrees().max_out == in.n() - 2});
  r.cases.push_back({"pi == upper <=> regular or almost regular", pi == upper,
                     is_regular_tournament(in.digraph(), in.degrees()) ||
                         is_almost_regular_tournament(in.digraph(), in.degrees())});
  r.witnesses = {in.pr().prox_witness};
  r.details["pi"] = detail::show(pi);
  r.details["lower"] = detail::show(lower);
  r.details["upper"] = detail::show(upper);
  return r;
}

/// Tournament remoteness: 3/2 (n odd) or 3/2 + 1/(2(n-1)) <= rho <= n/2.
inline VerificationReport verify_tournament_remoteness(const Instance& in) {
  detail::require(in.tournament(), "input is not a tournament");
  detail::require_strong(in);
  detail::require(in.n() >= 3, "tournament bounds need n >= 3");
  auto r = detail::start_report(TheoremId::kTournamentRemoteness, in);
  const auto n = static_cast<std::int64_t>(in.n());
  const Rational rho = in.pr().rho;
  const Rational lower = n % 2 == 1 ? Rational(3, 2) : Rational(3, 2) + Rational(1, 2 * (n - 1));
  const Rational upper(n, 2);
  r.bound_holds = lower <= rho && rho <= upper;
  r.cases.push_back({"rho == lower <=> regular or almost regular", rho == lower,
                     is_regular_tournament(in.digraph(), in.degrees()) ||
                         is_almost_regular_tournament(in.digraph(), in.degrees())});
  r.cases.push_back({"rho == n/2 <=> isomorphic to the extremal tournament", rho == upper,
                     is_extremal_tournament(in.digraph())});
  r.witnesses = {in.pr().rem_witness};
  r.details["rho"] = detail::show(rho);
  r.details["lower"] = detail::show(lower);
  r.details["upper"] = detail::show(upper);
  return r;
}

/// Strong tournament: pi == rho iff regular.
inline VerificationReport verify_tournament_balance(const Instance& in) {
  detail::require(in.tournament(), "input is not a tournament");
  detail::require_strong(in);
  detail::require(in.n() >= 2, "need n >= 2");
  auto r = detail::start_report(TheoremId::kTournamentBalance, in);
  r.bound_holds = in.pr().pi <= in.pr().rho;
  r.cases.push_back({"pi == rho <=> regular", in.pr().pi == in.pr().rho,
                     in.degrees().min_semi == in.degrees().max_semi});
  r.details["pi"] = detail::show(in.pr().pi);
  r.details["rho"] = detail::show(in.pr().rho);
  return r;
}

namespace detail {

inline const PartiteStructure& require_strong_bipartite(const Instance& in) {
  require(in.bipartite().has_value(), "input is not a bipartite tournament");
  require_strong(in);
  return *in.bipartite();
}

}  // namespace detail

/// Bad strong bipartite tournament => pi != rho.
inline VerificationReport verify_bad_separates(const Instance& in) {
  const auto& ps = detail::require_strong_bipartite(in);
  auto r = detail::start_report(TheoremId::kBadSeparates, in);
  const auto gb = classify_good_bad(in.digraph(), ps);
  r.cases.push_back({"bad => pi != rho", in.pr().pi != in.pr().rho, !gb.good, true});
  if (gb.bad_witness) r.witnesses = {gb.bad_witness->first, gb.bad_witness->second};
  r.details["good"] = gb.good ? "true" : "false";
  return r;
}

/// Good strong bipartite tournament => every vertex is a 4-king.
inline VerificationReport verify_good_four_kings(const Instance& in) {
  const auto& ps = detail::require_strong_bipartite(in);
  auto r = detail::start_report(TheoremId::kGoodFourKings, in);
  const auto gb = classify_good_bad(in.digraph(), ps);
  const auto& ecc = in.sums().ecc;
  const bool all_kings = std::all_of(ecc.begin(), ecc.end(), [](auto e) { return e <= 4; });
  r.cases.push_back({"good => every vertex is a 4-king", all_kings, gb.good, true});
  for (Vertex v = 0; v < in.n(); ++v)
    if (ecc[v] > 4) r.witnesses.push_back(v);
  r.details["max_ecc"] = std::to_string(*std::max_element(ecc.begin(), ecc.end()));
  return r;
}

/// Good strong bipartite tournament: closed-form sigma equals BFS sigma at
/// every vertex; when pi == rho the pairwise mu - d+ relations hold.
inline VerificationReport verify_sigma_formula(const Instance& in) {
  const auto& ps = detail::require_strong_bipartite(in);
  detail::require(classify_good_bad(in.digraph(), ps).good,
                  "sigma formula needs a good bipartite tournament");
  auto r = detail::start_report(TheoremId::kSigmaFormula, in);
  const auto mu = mu_values(in.digraph(), ps);
  for (std::size_t p = 0; p < 2; ++p) {
    for (Vertex v : ps.parts[p]) {
      const auto formula = sigma_formula_value(ps.parts[p].size(), ps.parts[1 - p].size(), mu[v],
                                               in.degrees().out_degrees[v]);
      if (formula != static_cast<std::int64_t>(in.sums().sigma[v])) {
        r.bound_holds = false;
        r.witnesses.push_back(v);
      }
    }
  }
  // Equal sigma within a part forces equal mu - d+; across parts the
  // constants 2(mu - d+) + |other part| coincide.
  bool relations = true;
  const auto a = static_cast<long long>(ps.parts[0].size());
  const auto b = static_cast<long long>(ps.parts[1].size());
  std::optional<long long> ka, kb;
  for (std::size_t p = 0; p < 2; ++p) {
    for (Vertex v : ps.parts[p]) {
      const long long k = static_cast<long long>(mu[v]) -
                          static_cast<long long>(in.degrees().out_degrees[v]);
      auto& slot = p == 0 ? ka : kb;
      if (!slot) slot = k;
      else if (*slot != k) relations = false;
    }
  }
  if (relations && ka && kb && 2 * *ka + b != 2 * *kb + a) relations = false;
  r.cases.push_back({"pi == rho => pairwise mu - d+ relations", relations,
                     in.pr().pi == in.pr().rho, true});
  return r;
}

/// Strong bipartite tournament: pi == rho iff good and the constants
/// 2(mu - d+) + |other part| agree on every vertex.
inline VerificationReport verify_balance_constant(const Instance& in) {
  detail::require_strong_bipartite(in);
  auto r = detail::start_report(TheoremId::kBalanceConstant, in);
  const auto rep = check_equality_criterion(in.digraph());
  r.cases.push_back({"pi == rho <=> good and common constant c", rep.pi_equals_rho,
                     rep.criterion_predicts_equality});
  r.details["good"] = rep.good ? "true" : "false";
  if (rep.constant_c) r.details["c"] = std::to_string(*rep.constant_c);
  return r;
}

/// Good bipartite tournament with constant mu: pi == rho iff A vertices have
/// out-degree |B|/2 and B vertices |A|/2.
inline VerificationReport verify_uniform_class_degrees(const Instance& in) {
  detail::require_strong_bipartite(in);
  auto r = detail::start_report(TheoremId::kUniformClassDegrees, in);
  const bool degrees_ok = check_cor_reg(in.digraph());
  r.cases.push_back({"pi == rho <=> out-degrees |B|/2 on A and |A|/2 on B",
                     in.pr().pi == in.pr().rho, degrees_ok});
  return r;
}

/// Null when `id` applies to the instance, else the reason it does not.
inline std::optional<std::string> precondition_failure(TheoremId id, const Instance& in) {
  const bool strong = in.strong();
  switch (id) {
    case TheoremId::kProximityBounds:
    case TheoremId::kRemotenessBounds:
      if (!strong) return "not strong";
      if (in.n() < 3) return "n < 3";
      return std::nullopt;
    case TheoremId::kRemotenessProximityGap:
      if (!strong) return "not strong";
      if (in.n() < 2) return "n < 2";
      return std::nullopt;
    case TheoremId::kMaxScoreKing:
      if (!in.tournament()) return "not a tournament";
      return std::nullopt;
    case TheoremId::kTournamentProximity:
    case TheoremId::kTournamentRemoteness:
    case TheoremId::kTournamentBalance:
      if (!in.tournament()) return "not a tournament";
      if (!strong) return "not strong";
      if (in.n() < 3) return "n < 3";
      return std::nullopt;
    case TheoremId::kBadSeparates:
    case TheoremId::kGoodFourKings:
    case TheoremId::kBalanceConstant:
      if (!in.bipartite()) return "not a bipartite tournament";
      if (!strong) return "not strong";
      return std::nullopt;
    case TheoremId::kSigmaFormula:
      if (!in.bipartite()) return "not a bipartite tournament";
      if (!strong) return "not strong";
      if (!classify_good_bad(in.digraph(), *in.bipartite()).good) return "bad";
      return std::nullopt;
    case TheoremId::kUniformClassDegrees: {
      if (!in.bipartite()) return "not a bipartite tournament";
      if (!strong) return "not strong";
      if (!classify_good_bad(in.digraph(), *in.bipartite()).good) return "bad";
      const auto mu = mu_values(in.digraph(), *in.bipartite());
      if (std::adjacent_find(mu.begin(), mu.end(), std::not_equal_to<>()) != mu.end())
        return "mu not constant";
      return std::nullopt;
    }
    case TheoremId::kDigraphCounterexamples:
      return "applies to the hub and dicycle families only";
  }
  return "unknown theorem";
}

/// Runs one verifier. Throws when the preconditions fail.
inline VerificationReport verify(TheoremId id, const Instance& in) {
  if (auto why = precondition_failure(id, in)) {
    if (*why == "not strong") in.sums();
    throw Error(std::string(theorem_token(id)) + ": " + *why);
  }
  switch (id) {
    case TheoremId::kProximityBounds: return verify_proximity_bounds(in);
    case TheoremId::kRemotenessBounds: return verify_remoteness_bounds(in);
    case TheoremId::kRemotenessProximityGap: return verify_remoteness_proximity_gap(in);
    case TheoremId::kMaxScoreKing: return verify_max_score_king(in);
    case TheoremId::kTournamentProximity: return verify_tournament_proximity(in);
    case TheoremId::kTournamentRemoteness: return verify_tournament_remoteness(in);
    case TheoremId::kTournamentBalance: return verify_tournament_balance(in);
    case TheoremId::kBadSeparates: return verify_bad_separates(in);
    case TheoremId::kGoodFourKings: return verify_good_four_kings(in);
    case TheoremId::kSigmaFormula: return verify_sigma_formula(in);
    case TheoremId::kBalanceConstant: return verify_balance_constant(in);
    case TheoremId::kUniformClassDegrees: return verify_uniform_class_degrees(in);
    case TheoremId::kDigraphCounterexamples: break;
  }
  throw Error("unhandled theorem");
}

enum class CounterexampleKind { kDicycle, kHub };

/// Facts that hold for connected graphs but fail for these strong digraphs.
///
/// Hub digraph: diam > 2 rad (n >= 4) and rad < rho. Dicycle: rad > rho,
/// a single vertex at each distance 1..n-2 from every vertex, and
/// rad = n-1 > floor(n/2).
inline VerificationReport verify_digraph_counterexamples(CounterexampleKind kind, std::size_t n,
                                                         std::size_t c = 1) {
  const Digraph d = kind == CounterexampleKind::kHub ? hub_digraph(n, c) : dicycle(n);
  if (n < 3) throw Error("counterexample facts need n >= 3");
  const Instance in(d);
  auto r = detail::start_report(TheoremId::kDigraphCounterexamples, in);
  const auto rd = radius_diameter(in.sums());
  const Rational rad(rd.radius), diam(rd.diameter);
  const Rational rho = in.pr().rho;
  r.details["family"] = kind == CounterexampleKind::kHub ? "hub_digraph" : "dicycle";
  r.details["rad"] = std::to_string(rd.radius);
  r.details["diam"] = std::to_string(rd.diameter);
  r.details["rho"] = detail::show(rho);
  if (kind == CounterexampleKind::kHub) {
    const bool diam_exceeds = n < 4 || rd.diameter > 2 * rd.radius;
    const bool rad_below_rho = rad < rho;
    r.details["diam_gt_2rad"] = diam_exceeds ? "true" : "false";
    r.details["rad_lt_rho"] = rad_below_rho ? "true" : "false";
    r.bound_holds = diam_exceeds && rad_below_rho;
  } else {
    const bool rad_above_rho = rad > rho;
    bool single_layers = true;
    for (Vertex v = 0; v < n; ++v) {
      const auto prof = bfs_profile(d, v);
      for (std::size_t i = 1; i + 1 < n; ++i)
        if (i >= prof.distance_degree.size() || prof.distance_degree[i] != 1) single_layers = false;
    }
    const bool rad_large = rd.radius == n - 1 && rd.radius > n / 2;
    r.details["rad_gt_rho"] = rad_above_rho ? "true" : "false";
    r.details["single_vertex_layers"] = single_layers ? "true" : "false";
    r.details["rad_gt_floor_half_n"] = rad_large ? "true" : "false";
    r.bound_holds = rad_above_rho && single_layers && rad_large;
  }
  return r;
}

/// Family-specific checks used by `construct --expect`. Each entry is a
/// (description, passed) pair.
inline std::vector<std::pair<std::string, bool>> expected_invariants(const ConstructionSpec& spec,
                                                                     const Digraph& d) {
  std::vector<std::pair<std::string, bool>> out;
  const Instance in(d);
  const auto n = static_cast<std::int64_t>(d.order());
  out.emplace_back("strong", in.strong());
  if (!in.strong()) return out;
  const auto& pr = in.pr();
  const auto rd = radius_diameter(in.sums());
  switch (spec.family) {
    case Family::kDicycle:
      out.emplace_back("pi == n/2", pr.pi == Rational(n, 2));
      out.emplace_back("rho == n/2", pr.rho == Rational(n, 2));
      out.emplace_back("rad == diam == n-1",
                       rd.radius == d.order() - 1 && rd.diameter == d.order() - 1);
      break;
    case Family::kExtremalTournament:
      out.emplace_back("tournament", in.tournament());
      out.emplace_back("rho == n/2", pr.rho == Rational(n, 2));
      out.emplace_back("remoteness witness is vertex 0", in.sums().ecc[0] == d.order() - 1);
      break;
    case Family::kHubDigraph:
      out.emplace_back("rad == 1", rd.radius == 1);
      out.emplace_back("diam == n-1", rd.diameter == d.order() - 1);
      out.emplace_back("rho == n/2", pr.rho == Rational(n, 2));
      break;
    case Family::kHamExtremal:
      out.emplace_back("ecc(0) == n-1", in.sums().ecc[0] == d.order() - 1);
      out.emplace_back("rho == n/2", pr.rho == Rational(n, 2));
      break;
    case Family::kBipartiteEqual:
    case Family::kBipartiteT1:
    case Family::kBipartiteBlowup: {
      out.emplace_back("bipartite tournament", in.bipartite().has_value());
      if (!in.bipartite()) break;
      out.emplace_back("good", classify_good_bad(d, *in.bipartite()).good);
      out.emplace_back("pi == rho", pr.pi == pr.rho);
      if (spec.family == Family::kBipartiteBlowup) {
        const auto mu = mu_values(d, *in.bipartite());
        const auto t = static_cast<std::size_t>(spec.param("t"));
        out.emplace_back("mu == t everywhere",
                         std::all_of(mu.begin(), mu.end(), [&](auto x) { return x == t; }));
      }
      break;
    }
    case Family::kFig1Graph:
    case Family::kFig1Blowup: {
      out.emplace_back("symmetric", is_symmetric(d));
      out.emplace_back("non-regular", in.degrees().min_semi != in.degrees().max_semi);
      const auto& s = in.sums().sigma;
      out.emplace_back("all sigma equal",
                       std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end());
      break;
    }
  }
  return out;
}

}  // namespace dprox

#endif  // DPROX_VERIFIERS_HPP
