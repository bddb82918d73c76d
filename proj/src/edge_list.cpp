#include "fracfactor/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "fracfactor/errors.hpp"

namespace fracfactor {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

// Splits a line into whitespace-separated nonnegative integers.
std::vector<long long> integers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j || value < 0) {
      fail(line_no, "expected a nonnegative integer, got '" + std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    auto values = integers(line, line_no);
    if (values.size() != 2) fail(line_no, "expected exactly two integers");
    if (n < 0) {
      n = values[0];
      m = values[1];
      if (n > 1'000'000) fail(line_no, "vertex count too large");
      if (m > n * (n - 1) / 2) fail(line_no, "edge count exceeds n(n-1)/2");
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) fail(line_no, "more edges than declared");
    long long u = values[0];
    long long v = values[1];
    if (u == v) fail(line_no, "loop at vertex " + std::to_string(u));
    if (u > v) fail(line_no, "edge endpoints must satisfy u < v");
    if (v >= n) fail(line_no, "vertex " + std::to_string(v) + " out of range");
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) fail(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(e);
  }
  if (n < 0) throw InputError("missing 'n m' header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("line " + std::to_string(line_no) + ": declared " + std::to_string(m) +
                     " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace fracfactor
