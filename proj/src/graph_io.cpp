// Copyright 2026 The mcgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "mcgraph/error.hpp"

namespace mcg {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

bool LooksLikeGraph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) return true;
  if (line.empty()) return false;
  for (char c : line) {
    if (c < 63 || c > 126) return false;
  }
  return true;
}

}  // namespace

Multigraph DecodeGraph6(std::string_view text) {
  text = Trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) {
      throw Error(ErrorCode::kMalformedGraph6, "unexpected end of input");
    }
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kMalformedGraph6, "byte outside [63, 126]");
    }
    return c - 63;
  };
  long n = next();
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') {
      throw Error(ErrorCode::kBoundExceeded, "graph6 order above 258047");
    }
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kBoundExceeded, "graph6 order above 64");
  }
  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected) {
    throw Error(ErrorCode::kMalformedGraph6, "edge section has wrong length");
  }
  std::vector<Edge> edges;
  long k = 0;
  int word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) word = next();
      if ((word >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero.
  if (k % 6 != 0 && (word & ((1 << (6 - k % 6)) - 1)) != 0) {
    throw Error(ErrorCode::kMalformedGraph6, "nonzero padding bits");
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string EncodeGraph6(const Multigraph& g) {
  if (!g.is_simple()) {
    throw Error(ErrorCode::kNotSimple, "graph6 cannot encode parallel edges");
  }
  const int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (Contains(g.neighbor_set(j), i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

std::string EncodeMg(const Multigraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

Multigraph ReadMgRecord(std::istream& in) {
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::kParseError, "expected header \"n m\"");
  }
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kBoundExceeded, "vertex count above 64");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    long u = -1;
    long v = -1;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kParseError,
                  "expected " + std::to_string(m) + " edge lines");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Multigraph DecodeMg(std::string_view text) {
  std::istringstream in{std::string(text)};
  Multigraph g = ReadMgRecord(in);
  std::string rest;
  if (in >> rest) {
    throw Error(ErrorCode::kParseError, "trailing data after .mg record");
  }
  return g;
}

std::vector<Multigraph> ReadGraphs(std::string_view text) {
  std::vector<Multigraph> out;
  std::string mg_buffer;
  auto flush_mg = [&]() {
    std::istringstream in(mg_buffer);
    std::string probe;
    while (in >> std::ws && in.peek() != EOF) out.push_back(ReadMgRecord(in));
    mg_buffer.clear();
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (LooksLikeGraph6(line)) {
      flush_mg();
      out.push_back(DecodeGraph6(line));
    } else {
      mg_buffer.append(line);
      mg_buffer.push_back('\n');
    }
    if (end == text.size()) break;
  }
  flush_mg();
  return out;
}

std::vector<Multigraph> ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ReadGraphs(buffer.str());
}

}  // namespace mcg
