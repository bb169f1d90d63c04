#include "doily/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace doily {

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edge_list;
  if (name == "graph6") return GraphFormat::graph6;
  throw ParseError("unknown graph format '" + std::string(name) + "' (expected edgelist or graph6)");
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw ParseError("edge list: negative count in header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) +
                                          " edges, got " + std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: endpoint outside 0.." + std::to_string(n - 1) +
                       " on edge line " + std::to_string(i + 1));
    if (u == v) throw ParseError("edge list: self-loop on edge line " + std::to_string(i + 1));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError("edge list: duplicate edge on line " + std::to_string(i + 1));
    edges.push_back(e);
  }
  char extra;
  if (in >> extra) throw ParseError("edge list: trailing content after the last edge");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

namespace {

// graph6 packs the upper triangle of the adjacency matrix, column by column
// (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), 6 bits per printable character.
class Bit6Reader {
 public:
  explicit Bit6Reader(std::string_view data) : data_(data) {}

  int next_bit() {
    if (pos_ >= data_.size() * 6) throw ParseError("graph6: input truncated");
    char c = data_[pos_ / 6];
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
    int bit = ((c - 63) >> (5 - static_cast<int>(pos_ % 6))) & 1;
    ++pos_;
    return bit;
  }

 private:
  std::string_view data_;
  size_t pos_ = 0;
};

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty input");

  size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= line.size()) throw ParseError("graph6: input truncated");
    char c = line[pos++];
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
    return c - 63;
  };

  long long n;
  if (line[0] != '~') {
    n = take();
  } else {
    ++pos;
    if (pos < line.size() && line[pos] == '~')
      throw ParseError("graph6: graphs with more than 258047 vertices are not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | take();
  }
  if (n > 1'000'000) throw ParseError("graph6: vertex count too large");

  Bit6Reader bits(line.substr(pos));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (bits.next_bit()) edges.emplace_back(u, v);
  size_t body = static_cast<size_t>((n * (n - 1) / 2 + 5) / 6);
  if (line.size() != pos + body) throw ParseError("graph6: trailing content after the graph");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::edge_list) return read_edge_list(in);
  std::string line;
  while (std::getline(in, line)) {
    // Skip blank lines so that files with a trailing newline parse cleanly.
    if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
  }
  throw ParseError("graph6: no graph line in input");
}

}  // namespace doily
