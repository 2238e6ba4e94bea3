#include "turan/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "turan/errors.hpp"

namespace turan::io {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr long long kMaxGraph6Order = 68719476735;  // 2^36 - 1

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void append_order(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return v;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::edgelist;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

std::string format_name(GraphFormat f) { return f == GraphFormat::graph6 ? "graph6" : "edgelist"; }

std::string to_graph6(const Graph& g) {
  std::string out;
  append_order(out, g.order());
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n > kMaxGraph6Order || n > 1'000'000) throw ParseError("graph6: order too large");
  const long long bits = n * (n - 1) / 2;
  const long long expected = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != expected) {
    std::ostringstream os;
    os << "graph6: expected " << expected << " data bytes for order " << n << ", got " << text.size() - pos;
    throw ParseError(os.str());
  }
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = sextet(text.back());
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: non-zero padding bits");
  }
  return g;
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out.push_back(' ');
    out += std::to_string(e.v);
    out.push_back('\n');
  }
  return out;
}

Graph from_edgelist(std::string_view text, int min_order) {
  std::vector<Edge> edges;
  int order = min_order;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    long long vals[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int i = 0; i < 2; ++i) {
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      auto [q, ec] = std::from_chars(p, end, vals[i]);
      if (ec != std::errc{} || q == p)
        throw ParseError("edge list line " + std::to_string(line_no) + ": expected two vertex labels");
      p = q;
    }
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p != end) throw ParseError("edge list line " + std::to_string(line_no) + ": trailing characters");
    if (vals[0] < 0 || vals[1] < 0 || vals[0] > 1'000'000 || vals[1] > 1'000'000)
      throw ParseError("edge list line " + std::to_string(line_no) + ": label out of range");
    if (vals[0] == vals[1]) throw ParseError("edge list line " + std::to_string(line_no) + ": loop");
    edges.push_back({static_cast<Vertex>(vals[0]), static_cast<Vertex>(vals[1])});
    order = std::max<int>(order, static_cast<int>(std::max(vals[0], vals[1])) + 1);
  }
  Graph g(order);
  for (const auto& e : edges) {
    if (!g.add_edge(e.u, e.v))
      throw ParseError("edge list: duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  }
  return g;
}

std::string write_graph(const Graph& g, GraphFormat f) {
  return f == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edgelist(g);
}

GraphFormat detect_format(std::string_view text) {
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    for (char c : line)
      if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c)))
        return GraphFormat::graph6;
    return GraphFormat::edgelist;
  }
  // Empty input is the empty edge list.
  return GraphFormat::edgelist;
}

Graph read_graph(std::string_view text, int min_order) {
  if (detect_format(text) == GraphFormat::graph6) {
    auto graphs = read_graph6_lines(text);
    if (graphs.empty()) throw ParseError("graph6: no graph in input");
    return std::move(graphs.front());
  }
  return from_edgelist(text, min_order);
}

Graph read_graph_file(const std::string& path, int min_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph(buf.str(), min_order);
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line != kGraph6Header) out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace turan::io
