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

// Text formats: the plain edge-list format, digraph6 and graph6.
//
// Edge list:
//   n <count> directed|undirected
//   u v
//   ...
// Labels are 0-based; everything after '#' on a line is ignored.
//
// digraph6 is '&', then N(n), then the full n x n adjacency matrix in
// row-major order, packed big-endian six bits per byte (+63), zero padded.
// graph6 packs the upper triangle column by column: x(0,1), x(0,2), x(1,2),
// x(0,3), ...

#ifndef DPROX_IO_HPP
#define DPROX_IO_HPP

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dprox/digraph.hpp"

namespace dprox {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct EdgeListParse {
  Digraph digraph;
  bool undirected = false;
  std::size_t duplicates = 0;
};

/// Parses the edge-list format. Positions in errors are 1-based line numbers.
inline EdgeListParse read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<DigraphBuilder> builder;
  EdgeListParse out;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!builder) {
      long long n = 0;
      std::string kind;
      if (first != "n" || !(ls >> n >> kind) || n < 1)
        throw ParseError("expected header 'n <count> directed|undirected'", lineno);
      if (kind == "undirected") {
        out.undirected = true;
      } else if (kind != "directed") {
        throw ParseError("unknown edge-list kind '" + kind + "'", lineno);
      }
      builder.emplace(static_cast<std::size_t>(n));
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    std::istringstream ps(line);
    if (!(ps >> u >> v) || (ps >> extra))
      throw ParseError("expected a pair 'u v'", lineno);
    const auto n = static_cast<long long>(builder->order());
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has a label outside 0.." + std::to_string(n - 1),
                       lineno);
    if (u == v)
      throw ParseError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") is a loop",
                       lineno);
    const auto a = static_cast<Vertex>(u), b = static_cast<Vertex>(v);
    bool fresh = builder->add_arc(a, b);
    if (out.undirected) fresh = builder->add_arc(b, a) && fresh;
    if (!fresh) ++out.duplicates;
  }
  if (!builder) throw ParseError("missing edge-list header", lineno + 1);
  out.digraph = builder->build();
  return out;
}

inline EdgeListParse parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

/// Writes undirected form (one line per edge u<v) when `undirected` is set.
inline std::string write_edge_list(const Digraph& d, bool undirected = false) {
  std::ostringstream out;
  out << "n " << d.order() << (undirected ? " undirected" : " directed") << '\n';
  for (const auto& [u, v] : d.arcs())
    if (!undirected || u < v) out << u << ' ' << v << '\n';
  return out.str();
}

namespace detail {

inline void encode_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

// Returns n and advances pos past the size field.
inline std::size_t decode_size(std::string_view s, std::size_t& pos) {
  auto digit = [&](std::size_t at) -> std::size_t {
    if (at >= s.size()) throw ParseError("truncated size field", at);
    const auto c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw ParseError("invalid size byte", at);
    return c - 63U;
  };
  std::size_t n = digit(pos);
  if (n < 63) {
    ++pos;
    return n;
  }
  std::size_t len = 3;
  ++pos;
  if (pos < s.size() && s[pos] == 126) {
    len = 6;
    ++pos;
  }
  n = 0;
  for (std::size_t i = 0; i < len; ++i) n = (n << 6) | digit(pos + i);
  pos += len;
  return n;
}

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}
  void push(bool bit) {
    acc_ = static_cast<unsigned>((acc_ << 1) | (bit ? 1U : 0U));
    if (++fill_ == 6) flush();
  }
  void finish() {
    if (fill_ == 0) return;
    acc_ <<= (6 - fill_);
    flush();
  }

 private:
  void flush() {
    out_.push_back(static_cast<char>(acc_ + 63));
    acc_ = 0;
    fill_ = 0;
  }
  std::string& out_;
  unsigned acc_ = 0;
  int fill_ = 0;
};

class BitReader {
 public:
  BitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}
  bool next() {
    if (left_ == 0) {
      if (pos_ >= s_.size()) throw ParseError("truncated adjacency data", pos_);
      const auto c = static_cast<unsigned char>(s_[pos_]);
      if (c < 63 || c > 126) throw ParseError("invalid data byte", pos_);
      cur_ = c - 63U;
      left_ = 6;
      ++pos_;
    }
    --left_;
    return (cur_ >> left_) & 1U;
  }
  // Padding bits must be zero and no bytes may follow.
  void finish() {
    if (left_ != 0 && (cur_ & ((1U << left_) - 1U)) != 0)
      throw ParseError("nonzero padding bits", pos_ - 1);
    if (pos_ != s_.size()) throw ParseError("trailing bytes", pos_);
  }

 private:
  std::string_view s_;
  std::size_t pos_;
  unsigned cur_ = 0;
  int left_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace detail

inline std::string to_digraph6(const Digraph& d) {
  std::string out = "&";
  detail::encode_size(out, d.order());
  detail::BitWriter w(out);
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = 0; v < d.order(); ++v) w.push(d.has_arc(u, v));
  w.finish();
  return out;
}

/// Accepts an optional ">>digraph6<<" header. Loops are rejected.
inline Digraph from_digraph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  std::size_t pos = 0;
  if (s.starts_with(">>digraph6<<")) pos = 12;
  if (pos >= s.size() || s[pos] != '&') throw ParseError("expected '&'", pos);
  ++pos;
  const std::size_t n = detail::decode_size(s, pos);
  if (n == 0) throw ParseError("a digraph needs at least one vertex", pos);
  detail::BitReader r(s, pos);
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (!r.next()) continue;
      if (u == v)
        throw ParseError("loop at vertex " + std::to_string(u), pos + (u * n + v) / 6);
      b.add_arc(u, v);
    }
  }
  r.finish();
  return b.build();
}

/// Requires a symmetric digraph.
inline std::string to_graph6(const Digraph& d) {
  if (!is_symmetric(d)) throw Error("graph6 requires a symmetric digraph");
  std::string out;
  detail::encode_size(out, d.order());
  detail::BitWriter w(out);
  for (Vertex j = 1; j < d.order(); ++j)
    for (Vertex i = 0; i < j; ++i) w.push(d.has_arc(i, j));
  w.finish();
  return out;
}

inline Digraph from_graph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  std::size_t pos = 0;
  if (s.starts_with(">>graph6<<")) pos = 10;
  if (pos < s.size() && (s[pos] == '&' || s[pos] == ':' || s[pos] == ';'))
    throw ParseError("not a graph6 string", pos);
  const std::size_t n = detail::decode_size(s, pos);
  if (n == 0) throw ParseError("a graph needs at least one vertex", pos);
  detail::BitReader r(s, pos);
  DigraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (r.next()) {
        b.add_arc(i, j);
        b.add_arc(j, i);
      }
    }
  }
  r.finish();
  return b.build();
}

/// Dispatches on the leading byte: '&' digraph6, otherwise graph6.
inline Digraph from_graph_string(std::string_view line) {
  auto s = detail::trim(line);
  if (s.starts_with("&") || s.starts_with(">>digraph6<<")) return from_digraph6(s);
  return from_graph6(s);
}

}  // namespace dprox

#endif  // DPROX_IO_HPP
