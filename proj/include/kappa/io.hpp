#pragma once

/**
 * Graph file formats.
 *
 * graph6 (McKay): optional ">>graph6<<" header, then N(n), then the upper
 * triangle of the adjacency matrix in column order (x(0,1), x(0,2), x(1,2),
 * x(0,3), ...) packed six bits per byte, each byte offset by 63. Padding
 * bits in the final byte must be zero.
 *
 * Edge list: first meaningful line is the vertex count, then one "u v" pair
 * per line. '#' starts a comment; blank lines are ignored.
 */

#include "kappa/error.hpp"
#include "kappa/graph.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kappa {

namespace detail {

constexpr std::string_view graph6_header = ">>graph6<<";

inline auto graph6_byte(std::string_view text, std::size_t pos) -> int {
  if (pos >= text.size())
    throw ParseError("graph6: input truncated at byte " + std::to_string(pos), pos);
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: byte " + std::to_string(pos) + " (value " + std::to_string(c) +
                         ") outside the printable range 63..126",
                     pos);
  return c - 63;
}

inline auto strip_line_end(std::string_view text) -> std::string_view {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

} // namespace detail

inline auto from_graph6(std::string_view text) -> Graph {
  text = detail::strip_line_end(text);
  std::size_t pos = 0;
  if (text.substr(0, detail::graph6_header.size()) == detail::graph6_header)
    pos = detail::graph6_header.size();
  if (pos >= text.size())
    throw ParseError("graph6: empty input", pos);

  long long n = 0;
  if (detail::graph6_byte(text, pos) < 63) {
    n = detail::graph6_byte(text, pos++);
  }
  else {
    ++pos;
    int width = 3;
    if (pos < text.size() && detail::graph6_byte(text, pos) == 63) {
      ++pos;
      width = 6;
    }
    for (int i = 0; i < width; ++i)
      n = (n << 6) | detail::graph6_byte(text, pos++);
  }
  if (n > 100000)
    throw ParseError("graph6: vertex count " + std::to_string(n) + " too large", pos);

  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                     text.size() < pos + body ? text.size() : pos + body);

  int vn = static_cast<int>(n);
  std::vector<VertexSet> rows(vn, VertexSet(vn));
  std::size_t k = 0;
  for (int j = 1; j < vn; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = detail::graph6_byte(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  if (k % 6 != 0) {
    int byte = detail::graph6_byte(text, pos + k / 6);
    if (byte & ((1 << (6 - k % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits in final byte", pos + k / 6);
  }
  return Graph::from_rows(std::move(rows));
}

inline auto to_graph6(const Graph & g) -> std::string {
  std::string out;
  long long n = g.size();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  }
  else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.size(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// One graph per non-empty line.
inline auto read_graph6_lines(std::istream & in) -> std::vector<Graph> {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto view = detail::strip_line_end(line);
    if (view.empty())
      continue;
    try {
      out.push_back(from_graph6(view));
    }
    catch (const ParseError & e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

inline auto parse_edge_list(std::string_view text) -> Graph {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;

    std::vector<long long> values;
    for (const auto & t : tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(t, &used);
      }
      catch (const std::exception &) {
        used = 0;
      }
      if (used != t.size() || value < 0)
        throw ParseError("edge list line " + std::to_string(lineno) + ": '" + t +
                             "' is not a non-negative integer",
                         lineno);
      values.push_back(value);
    }

    if (n < 0) {
      if (values.size() != 1)
        throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected the vertex count alone",
                         lineno);
      if (values[0] > 100000)
        throw ParseError("edge list line " + std::to_string(lineno) + ": vertex count too large",
                         lineno);
      n = static_cast<int>(values[0]);
      continue;
    }
    if (values.size() != 2)
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'", lineno);
    auto u = values[0];
    auto v = values[1];
    if (u >= n || v >= n)
      throw ParseError("edge list line " + std::to_string(lineno) + ": endpoint out of range 0.." +
                           std::to_string(n - 1),
                       lineno);
    if (u == v)
      throw ParseError("edge list line " + std::to_string(lineno) + ": loop edge", lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0)
    throw ParseError("edge list: missing vertex count", lineno);
  return Graph::from_edge_list(n, edges);
}

inline auto to_edge_list(const Graph & g) -> std::string {
  std::string out = std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

enum class GraphFormat { graph6, edge_list };

inline auto format_name(GraphFormat f) -> std::string {
  return f == GraphFormat::graph6 ? "graph6" : "edge-list";
}

// Digits never occur in graph6 (bytes 63..126), so the first meaningful
// character settles the format.
inline auto sniff_format(std::string_view text) -> GraphFormat {
  bool in_comment = false;
  for (char c : text) {
    if (in_comment) {
      in_comment = c != '\n';
      continue;
    }
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    return std::isdigit(static_cast<unsigned char>(c)) ? GraphFormat::edge_list
                                                       : GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

struct LoadedGraph
{
  Graph graph;
  GraphFormat format;
};

inline auto parse_graph_text(std::string_view text, GraphFormat format) -> Graph {
  if (format == GraphFormat::edge_list)
    return parse_edge_list(text);
  // a .g6 file holding a single graph, possibly with a trailing newline
  auto body = detail::strip_line_end(text);
  if (body.find('\n') != std::string_view::npos)
    throw ParseError("graph6: expected a single graph, found several lines", body.find('\n'));
  return from_graph6(body);
}

inline auto load_graph_file(const std::filesystem::path & path) -> LoadedGraph {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  GraphFormat format;
  if (path.extension() == ".g6")
    format = GraphFormat::graph6;
  else if (path.extension() == ".el")
    format = GraphFormat::edge_list;
  else
    format = sniff_format(text);
  return {parse_graph_text(text, format), format};
}

inline auto load_graph6_corpus(const std::filesystem::path & path) -> std::vector<Graph> {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open corpus file " + path.string());
  return read_graph6_lines(in);
}

} // namespace kappa
