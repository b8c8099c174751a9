#include "joindet/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace joindet {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line, const char* what) {
  int value = 0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, tok.column,
                     std::string("expected ") + what + ", got '" + tok.text +
                         "'");
  return value;
}

int parse_vertex(const Token& tok, int line, int order) {
  const int v = parse_int(tok, line, "a vertex label");
  if (v < 1 || v > order)
    throw ParseError(line, tok.column,
                     "vertex " + tok.text + " out of range 1.." +
                         std::to_string(order));
  return v;
}

}  // namespace

Digraph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  Digraph graph;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::vector<Token> toks = tokenize(line);
    if (toks.empty() || toks.front().text.front() == '#') continue;

    if (!have_header) {
      if (toks.front().text != "digraph")
        throw ParseError(line_no, toks.front().column,
                         "expected 'digraph <order>' header, got '" +
                             toks.front().text + "'");
      if (toks.size() < 2)
        throw ParseError(line_no, toks.front().column + 7,
                         "missing graph order after 'digraph'");
      if (toks.size() > 2)
        throw ParseError(line_no, toks[2].column,
                         "unexpected token '" + toks[2].text +
                             "' after graph order");
      const int order = parse_int(toks[1], line_no, "the graph order");
      if (order < 1)
        throw ParseError(line_no, toks[1].column,
                         "graph order must be at least 1");
      graph = Digraph(order);
      have_header = true;
      continue;
    }

    if (toks.size() != 3)
      throw ParseError(line_no, toks.front().column,
                       "expected an edge statement 'u -> v' or 'u -- v'");
    const int u = parse_vertex(toks[0], line_no, graph.order());
    const int v = parse_vertex(toks[2], line_no, graph.order());
    const std::string& arrow = toks[1].text;
    if (arrow != "->" && arrow != "--")
      throw ParseError(line_no, toks[1].column,
                       "expected '->' or '--', got '" + arrow + "'");
    if (u == v)
      throw ParseError(line_no, toks[2].column,
                       "loop at vertex " + std::to_string(u) +
                           " is not allowed");
    if (graph.has_edge(u, v) || (arrow == "--" && graph.has_edge(v, u)))
      throw ParseError(line_no, toks.front().column,
                       "duplicate edge " + std::to_string(u) + " " + arrow +
                           " " + std::to_string(v));
    if (arrow == "--")
      graph.add_undirected(u, v);
    else
      graph.add_edge(u, v);
  }
  if (!have_header)
    throw ParseError(line_no, 1, "missing 'digraph <order>' header");
  return graph;
}

std::string serialize_graph(const Digraph& g) {
  std::string out = "digraph " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges())
    if (e.from < e.to && g.has_edge(e.to, e.from))
      out += std::to_string(e.from) + " -- " + std::to_string(e.to) + "\n";
  for (const Edge& e : g.edges())
    if (!g.has_edge(e.to, e.from))
      out += std::to_string(e.from) + " -> " + std::to_string(e.to) + "\n";
  return out;
}

Digraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace joindet
