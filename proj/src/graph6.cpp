#include "factor/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace factor {

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::FormatError, "empty graph6 string");
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw Error(ErrorKind::FormatError,
                "multi-byte graph6 headers (n > 62) not supported");
  if (header < 63 || header > 125)
    throw Error(ErrorKind::FormatError, "bad graph6 header byte");
  const int n = header - 63;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes)
    throw Error(ErrorKind::FormatError,
                "graph6 length mismatch: expected " +
                    std::to_string(1 + nbytes) + " bytes, got " +
                    std::to_string(text.size()));
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      const unsigned char byte = static_cast<unsigned char>(text[1 + bit / 6]);
      if (byte < 63 || byte > 126)
        throw Error(ErrorKind::FormatError, "bad graph6 data byte");
      if ((byte - 63) >> (5 - bit % 6) & 1) edges.emplace_back(row, col);
    }
  }
  // Padding bits must be zero.
  for (std::size_t b = nbits; b < nbytes * 6; ++b) {
    const unsigned char byte = static_cast<unsigned char>(text[1 + b / 6]);
    if ((byte - 63) >> (5 - b % 6) & 1)
      throw Error(ErrorKind::FormatError, "nonzero padding in graph6 data");
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw Error(ErrorKind::FormatError,
                "graph6 output limited to 62 vertices, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw Error(ErrorKind::FormatError, "edge list must start with \"n m\"");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw Error(ErrorKind::FormatError,
                  "edge list truncated after " + std::to_string(i) + " edges");
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos)
    throw Error(ErrorKind::FormatError, "empty graph file " + path);
  if (std::isdigit(static_cast<unsigned char>(text[pos])))
    return parse_edge_list(text);
  std::size_t end = text.find_first_of(" \t\r\n", pos);
  if (end == std::string::npos) end = text.size();
  return parse_graph6(std::string_view(text).substr(pos, end - pos));
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace factor
