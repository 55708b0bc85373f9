#pragma once

#include <string>
#include <vector>

#include "tcl/coloring.hpp"
#include "tcl/hypergraph.hpp"

namespace tcl {

// Text formats. Emission is canonical (sorted, fixed spacing) so files
// round-trip byte-identically through parse + emit.

// Line 1: "r n m"; then m edge lines of r increasing vertex ids. Lines
// starting with '#' are comments and are ignored by the parser.
std::string emit_hypergraph(const Hypergraph& h, const std::string& comment = "");
Hypergraph parse_hypergraph(const std::string& text);

// Line 1: "r k"; then one line per edge: "v_1 .. v_r j c" with the color
// index and coset id of the canonical orientation. A "# mode <young|full>"
// comment selects the color system; a legend describing each color follows
// as comments.
std::string emit_coloring(const AccordantColoring& c);
AccordantColoring parse_coloring(const std::string& text);

// One line of space-separated vertices (a cyclic sequence).
std::string emit_walk(const std::vector<int>& walk);
std::vector<int> parse_walk(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tcl
