#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pgc/graph.hpp"

namespace pgc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Lines `u v id [weight]`; `#` starts a comment.
std::vector<EdgeRecord> read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const PlanarMultigraph& g);

// Lines `v: e1 e2 ...` in external labels; a self-loop is listed twice at its vertex.
void read_rotation(std::istream& in, PlanarMultigraph& g);
void write_rotation(std::ostream& out, const PlanarMultigraph& g);

std::string format_weight(double w);

}  // namespace pgc
