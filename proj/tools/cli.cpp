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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dprox/dprox.hpp"

namespace dprox::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t default_shards() {
  if (const char* env = std::getenv("DPROX_SHARDS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string detect_format(const std::string& format, const std::string& path,
                          const std::string& text) {
  if (format != "auto") return format;
  auto ends = [&](std::string_view ext) { return path.ends_with(ext); };
  if (ends(".d6")) return "digraph6";
  if (ends(".g6")) return "graph6";
  if (ends(".el") || ends(".edges")) return "edgelist";
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'n' || c == '#') return "edgelist";
    if (c == '&' || text.find(">>digraph6<<") != std::string::npos) return "digraph6";
    return "graph6";
  }
  throw UsageError("empty input");
}

std::vector<Digraph> load_instances(const std::string& path, const std::string& format_opt,
                                    bool undirected, std::istream& in, std::ostream& err) {
  const std::string text = slurp(path, in);
  const std::string format = detect_format(format_opt, path, text);
  std::vector<Digraph> out;
  if (format == "edgelist") {
    std::string body = text;
    if (undirected) {
      // Reinterpret the header kind; pairs then yield both arcs.
      std::istringstream lines(text);
      std::ostringstream fixed;
      std::string line;
      bool header_done = false;
      while (std::getline(lines, line)) {
        if (!header_done) {
          std::string stripped = line.substr(0, line.find('#'));
          std::istringstream ls(stripped);
          std::string tag, count;
          if (ls >> tag >> count) {
            fixed << tag << ' ' << count << " undirected\n";
            header_done = true;
            continue;
          }
        }
        fixed << line << '\n';
      }
      body = fixed.str();
    }
    auto parsed = parse_edge_list(body);
    if (parsed.duplicates > 0)
      err << "warning: " << parsed.duplicates << " duplicate pair(s) collapsed\n";
    out.push_back(std::move(parsed.digraph));
  } else if (format == "digraph6" || format == "graph6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (detail::trim(line).empty()) continue;
      out.push_back(format == "digraph6" ? from_digraph6(line) : from_graph6(line));
    }
    if (undirected)
      for (const auto& d : out)
        if (!is_symmetric(d)) throw UsageError("--undirected given but input is not symmetric");
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  if (out.empty()) throw UsageError("no instances in input");
  return out;
}

ConstructionSpec parse_family_spec(const std::string& text) {
  // family[:key=value,key=value,...]; back arcs as back=j>i;j>i
  ConstructionSpec spec;
  const auto colon = text.find(':');
  spec.family = parse_family(text.substr(0, colon));
  if (colon == std::string::npos) return spec;
  for (const auto& kv : split(text.substr(colon + 1), ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in '" + kv + "'");
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "back") {
      for (const auto& arc : split(value, ';')) {
        const auto gt = arc.find('>');
        if (gt == std::string::npos) throw UsageError("back arcs are written j>i");
        spec.back_arcs.emplace_back(static_cast<Vertex>(std::stoul(arc.substr(0, gt))),
                                    static_cast<Vertex>(std::stoul(arc.substr(gt + 1))));
      }
    } else {
      spec.params[key] = std::stoll(value);
    }
  }
  return spec;
}

std::string render(const Digraph& d, const std::string& format) {
  if (format == "digraph6") return to_digraph6(d) + "\n";
  if (format == "graph6") return to_graph6(d) + "\n";
  if (format == "edgelist") return write_edge_list(d, is_symmetric(d));
  throw UsageError("unknown output format '" + format + "'");
}

/// "tournaments,5" or "bipartite_tournaments,3,4".
std::pair<DigraphClass, ClassOrder> parse_class_order(const std::vector<std::string>& parts) {
  if (parts.empty()) throw UsageError("missing class");
  const DigraphClass cls = parse_class(parts[0]);
  ClassOrder order;
  if (cls == DigraphClass::kBipartiteTournaments) {
    if (parts.size() != 3) throw UsageError("bipartite class needs part sizes a,b");
    order.a = std::stoul(parts[1]);
    order.b = std::stoul(parts[2]);
    order.n = order.a + order.b;
  } else {
    if (parts.size() != 2) throw UsageError("class needs an order n");
    order.n = std::stoul(parts[1]);
  }
  return {cls, order};
}

int print_exhaustive(const ExhaustiveResult& r, std::ostream& out, std::ostream& err) {
  out << to_json(r).dump() << '\n';
  if (!r.passed()) {
    for (const auto& c : r.counterexamples) err << "counterexample: " << to_json(c).dump() << '\n';
    return kExitInconsistent;
  }
  return kExitOk;
}

std::vector<TheoremId> all_theorems_for(const std::string& token) {
  return theorem_group(token);
}

}  // namespace

Json analysis_json(const Digraph& d) {
  Json j;
  j["digraph6"] = to_digraph6(d);
  const Json metrics = to_json(compute_metrics(d));
  for (const auto& [k, v] : metrics.items()) j[k] = v;
  return j;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Proximity, remoteness and distance invariants of strong digraphs"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Report metrics for each input instance");
  std::string a_input = "-", a_format = "auto";
  bool a_undirected = false, a_bipartite = false, a_csv = false, a_table = false;
  analyze->add_option("--input,-i", a_input, "Input file, '-' for stdin");
  analyze->add_option("--format", a_format, "auto|digraph6|graph6|edgelist");
  analyze->add_flag("--undirected", a_undirected, "Treat edge-list pairs as undirected edges");
  analyze->add_flag("--bipartite", a_bipartite, "Add the bipartite-tournament analysis");
  analyze->add_flag("--csv", a_csv, "Emit CSV rows instead of JSON");
  analyze->add_flag("--table", a_table, "With --bipartite: plain-text per-vertex table");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a member of a named family");
  std::string c_family, c_format = "digraph6", c_back;
  long long c_n = -1, c_c = -1, c_t = -1, c_half = -1;
  bool c_expect = false;
  construct->add_option("family", c_family, "Family name")->required();
  construct->add_option("--n", c_n);
  construct->add_option("--c", c_c);
  construct->add_option("--t", c_t);
  construct->add_option("--half", c_half);
  construct->add_option("--back", c_back, "ham_extremal backward arcs, e.g. 4>0;2>1");
  construct->add_option("--format", c_format, "digraph6|graph6|edgelist");
  construct->add_flag("--expect", c_expect, "Check the family's invariants; exit 1 on violation");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem on instances");
  std::string v_theorem, v_input, v_family, v_enumerate, v_format = "auto";
  std::size_t v_shards = default_shards();
  bool v_undirected = false;
  verify_cmd->add_option("theorem", v_theorem, "Theorem id, e.g. thm-3.3")->required();
  auto* v_in = verify_cmd->add_option("--input,-i", v_input);
  auto* v_fam = verify_cmd->add_option("--family", v_family, "family:key=value,...");
  auto* v_en = verify_cmd->add_option("--enumerate", v_enumerate, "class,n or bipartite,a,b");
  v_in->excludes(v_fam)->excludes(v_en);
  v_fam->excludes(v_en);
  verify_cmd->add_option("--format", v_format);
  verify_cmd->add_flag("--undirected", v_undirected);
  verify_cmd->add_option("--shards", v_shards);

  // search
  auto* search_cmd = app.add_subcommand("search", "Enumerate a class and filter by predicates");
  std::string s_class = "tournaments", s_pred, s_dedup = "none", s_out, s_degrees, s_target;
  std::size_t s_n = 0, s_a = 0, s_b = 0, s_limit = 0, s_shards = default_shards();
  std::uint64_t s_seed = 0, s_iterations = 100000;
  search_cmd->add_option("--class", s_class);
  search_cmd->add_option("--n", s_n);
  search_cmd->add_option("--a", s_a);
  search_cmd->add_option("--b", s_b);
  search_cmd->add_option("--pred", s_pred, "Comma-separated predicates");
  search_cmd->add_option("--dedup", s_dedup, "none|canonical");
  search_cmd->add_option("--limit", s_limit);
  search_cmd->add_option("--shards", s_shards);
  search_cmd->add_option("--out,-o", s_out, "digraph6 output file");
  search_cmd->add_option("--degrees", s_degrees,
                         "Randomized mode: labeled degree sequence of a graph");
  search_cmd->add_option("--seed", s_seed);
  search_cmd->add_option("--iterations", s_iterations);
  search_cmd->add_option("--target", s_target, "Randomized mode: stop at a copy of this family");

  // exhaustive-verify
  auto* exhaustive = app.add_subcommand("exhaustive-verify",
                                        "Verify a theorem on every member of a class");
  std::string e_theorem, e_class, e_order;
  std::size_t e_shards = default_shards();
  exhaustive->add_option("theorem", e_theorem)->required();
  exhaustive->add_option("class", e_class)->required();
  exhaustive->add_option("order", e_order, "n, or a,b for bipartite")->required();
  exhaustive->add_option("--shards", e_shards);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto instances = load_instances(a_input, a_format, a_undirected, in, err);
      if (a_csv) out << csv_header() << '\n';
      for (const auto& d : instances) {
        if (a_csv) {
          out << csv_row(to_digraph6(d), compute_metrics(d)) << '\n';
          continue;
        }
        if (a_bipartite && a_table) {
          const auto rep = check_equality_criterion(d);
          out << "vertex part d+ mu sigma\n";
          for (const auto& row : rep.per_vertex)
            out << row.vertex << ' ' << (row.part == 0 ? 'A' : 'B') << ' ' << row.out_degree << ' '
                << row.mu << ' ' << *row.sigma << '\n';
          auto show = [](const std::optional<long long>& c) {
            return c ? std::to_string(*c) : std::string("none");
          };
          out << "constant_a " << show(rep.constant_a) << "\nconstant_b " << show(rep.constant_b)
              << "\nconstant_c " << show(rep.constant_c) << "\ngood " << rep.good
              << "\npi_equals_rho " << rep.pi_equals_rho << '\n';
          continue;
        }
        Json j = analysis_json(d);
        if (a_bipartite) j["bipartite"] = to_json(check_equality_criterion(d));
        out << j.dump() << '\n';
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      ConstructionSpec spec;
      spec.family = parse_family(c_family);
      if (c_n >= 0) spec.params["n"] = c_n;
      if (c_c >= 0) spec.params["c"] = c_c;
      if (c_t >= 0) spec.params["t"] = c_t;
      if (c_half >= 0) spec.params["half"] = c_half;
      if (!c_back.empty()) spec = [&] {
        auto s = parse_family_spec(c_family + ":back=" + c_back);
        s.params = spec.params;
        return s;
      }();
      const Digraph d = build(spec);
      out << render(d, c_format);
      if (c_expect) {
        bool ok = true;
        for (const auto& [what, passed] : expected_invariants(spec, d)) {
          if (!passed) {
            err << "expectation failed: " << what << '\n';
            ok = false;
          }
        }
        return ok ? kExitOk : kExitInconsistent;
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto ids = all_theorems_for(v_theorem);
      if (!v_enumerate.empty()) {
        const auto [cls, order] = parse_class_order(split(v_enumerate, ','));
        int code = kExitOk;
        for (auto id : ids) code = std::max(code, print_exhaustive(exhaustive_verify(id, cls, order, v_shards), out, err));
        return code;
      }
      bool consistent = true;
      auto emit = [&](const VerificationReport& rep) {
        out << to_json(rep).dump() << '\n';
        consistent = consistent && rep.consistent();
      };
      if (!v_family.empty()) {
        const auto spec = parse_family_spec(v_family);
        for (auto id : ids) {
          if (id == TheoremId::kDigraphCounterexamples) {
            if (spec.family == Family::kHubDigraph)
              emit(verify_digraph_counterexamples(CounterexampleKind::kHub,
                                                  static_cast<std::size_t>(spec.param("n")),
                                                  static_cast<std::size_t>(spec.param("c"))));
            else if (spec.family == Family::kDicycle)
              emit(verify_digraph_counterexamples(CounterexampleKind::kDicycle,
                                                  static_cast<std::size_t>(spec.param("n"))));
            else
              throw UsageError("sec5-facts applies to hub_digraph and dicycle only");
            continue;
          }
          emit(verify(id, Instance(build(spec))));
        }
      } else {
        if (v_input.empty()) v_input = "-";
        for (const auto& d : load_instances(v_input, v_format, v_undirected, in, err)) {
          const Instance inst(d);
          for (auto id : ids) emit(verify(id, inst));
        }
      }
      return consistent ? kExitOk : kExitInconsistent;
    }

    if (search_cmd->parsed()) {
      std::vector<Predicate> preds;
      for (const auto& p : split(s_pred, ',')) preds.push_back(parse_predicate(p));
      if (s_dedup != "none" && s_dedup != "canonical") throw UsageError("--dedup is none|canonical");
      const Dedup dedup = s_dedup == "canonical" ? Dedup::kCanonical : Dedup::kNone;
      SearchResult result;
      Json summary;
      if (!s_degrees.empty()) {
        RandomSearchQuery q;
        for (const auto& x : split(s_degrees, ',')) q.degrees.push_back(std::stoul(x));
        if (s_n != 0 && s_n != q.degrees.size()) throw UsageError("--n disagrees with --degrees");
        q.predicates = preds;
        q.dedup = dedup;
        q.seed = s_seed;
        q.iterations = s_iterations;
        q.shards = s_shards;
        if (!s_target.empty()) q.target = build(parse_family_spec(s_target));
        auto r = random_search(q);
        result = std::move(r.result);
        summary = to_json(result);
        summary["mode"] = "randomized";
        summary["iterations"] = s_iterations;
        summary["first_target_hit"] = optional_json(r.first_target_hit);
      } else {
        SearchQuery q;
        q.cls = parse_class(s_class);
        q.order = {s_n, s_a, s_b};
        if (q.cls == DigraphClass::kBipartiteTournaments) q.order.n = s_a + s_b;
        q.predicates = preds;
        q.dedup = dedup;
        q.limit = s_limit;
        q.shards = s_shards;
        result = search(q);
        summary = to_json(result);
        summary["mode"] = "exhaustive";
        summary["class"] = class_name(q.cls);
      }
      std::ostringstream lines;
      for (const auto& m : result.matches) lines << m.digraph6 << '\n';
      if (!s_out.empty()) {
        std::ofstream f(s_out);
        if (!f) throw UsageError("cannot write '" + s_out + "'");
        f << lines.str();
        out << summary.dump() << '\n';
      } else {
        out << lines.str();
        err << summary.dump() << '\n';
      }
      return kExitOk;
    }

    if (exhaustive->parsed()) {
      std::vector<std::string> parts{e_class};
      for (const auto& x : split(e_order, ',')) parts.push_back(x);
      const auto [cls, order] = parse_class_order(parts);
      int code = kExitOk;
      for (auto id : all_theorems_for(e_theorem))
        code = std::max(code, print_exhaustive(exhaustive_verify(id, cls, order, e_shards), out, err));
      return code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dprox::cli
