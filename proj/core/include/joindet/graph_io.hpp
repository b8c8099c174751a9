#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "joindet/digraph.hpp"

namespace joindet {

// Parse failure with the 1-based position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar: any number of `#` comment or blank lines; one header line
// `digraph <order>`; then edge lines `u -> v` (directed) or `u -- v`
// (both directions). Whitespace-tolerant. Loops, duplicate edges and
// out-of-range labels are rejected with their position.
Digraph parse_graph(std::string_view text);

// Canonical text: header, `u -- v` once per bidirected pair with
// u < v, then the remaining `u -> v` sorted. parse(serialize(g)) == g.
std::string serialize_graph(const Digraph& g);

Digraph load_graph_file(const std::string& path);

}  // namespace joindet
