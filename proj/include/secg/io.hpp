#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "secg/coloring.hpp"
#include "secg/embedding.hpp"

namespace secg {

// Line-oriented text format "secg 1":
//   secg 1
//   v <n>
//   e <u> <w>            one line per edge, ids become file order
//   r <v>: <n1> <n2> ...  clockwise rotation, all vertices or none
// Blank lines and '#' comments are permitted on input, never written, so
// generator output round-trips byte-identically.

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}
    int line;
};

struct ParsedGraph {
    Graph graph;
    std::optional<PlaneEmbedding> embedding;
};

ParsedGraph parse_graph_text(const std::string& text);

std::string write_graph_text(const Graph& g);
std::string write_graph_text(const PlaneEmbedding& e);

// Coloring certificates: an optional "palette <P>" line, then one
// "u v color" line per edge in edge-id order. Colors are 1-based in the
// file and 0-based in memory.
std::string write_coloring_text(const Graph& g, const StrongColoring& c);
StrongColoring parse_coloring_text(const Graph& g, const std::string& text);

}  // namespace secg
