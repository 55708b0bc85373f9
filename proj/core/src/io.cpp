#include "tcl/io.hpp"

#include <fstream>
#include <sstream>

namespace tcl {

namespace {

// Content lines with comments stripped; "# key ..." comment directives are
// collected separately.
struct Lines {
  std::vector<std::string> content;
  std::vector<std::string> directives;
};

Lines split_lines(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      out.directives.push_back(line.substr(first + 1));
      continue;
    }
    out.content.push_back(line);
  }
  return out;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long v;
  while (in >> v) out.push_back(v);
  std::string rest;
  if (in.clear(), in >> rest)
    throw parse_error(std::string(what) + ": unexpected token '" + rest + "'");
  return out;
}

}  // namespace

std::string emit_hypergraph(const Hypergraph& h, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream in(comment);
    std::string line;
    while (std::getline(in, line)) out << "# " << line << "\n";
  }
  out << h.r() << ' ' << h.n() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
  Lines lines = split_lines(text);
  if (lines.content.empty()) throw parse_error("hypergraph: missing header line");
  std::vector<long long> head = parse_ints(lines.content[0], "hypergraph header");
  if (head.size() != 3) throw parse_error("hypergraph: header must be 'r n m'");
  long long r = head[0], n = head[1], m = head[2];
  if (static_cast<long long>(lines.content.size()) != m + 1)
    throw parse_error("hypergraph: edge count does not match header");
  Hypergraph h(static_cast<int>(r), static_cast<int>(n));
  for (long long i = 1; i <= m; ++i) {
    std::vector<long long> vs = parse_ints(lines.content[i], "hypergraph edge");
    if (static_cast<long long>(vs.size()) != r) throw parse_error("hypergraph: bad edge arity");
    h.add_edge(std::vector<int>(vs.begin(), vs.end()));
  }
  return h;
}

std::string emit_coloring(const AccordantColoring& c) {
  if (!c.system) throw argument_error("coloring has no color system");
  const ColorSystem& sys = *c.system;
  std::ostringstream out;
  out << sys.r << ' ' << sys.k << '\n';
  for (const auto& [edge, value] : c.assignment) {
    for (int v : edge) out << v << ' ';
    out << value.color << ' ' << value.coset << '\n';
  }
  out << "# mode " << (sys.mode == ColorMode::full ? "full" : "young") << '\n';
  std::istringstream legend(sys.dump());
  std::string line;
  std::getline(legend, line);  // header repeats r k; keep only color lines
  int j = 0;
  while (std::getline(legend, line)) out << "# color " << j++ << ": " << line << '\n';
  return out.str();
}

AccordantColoring parse_coloring(const std::string& text) {
  Lines lines = split_lines(text);
  if (lines.content.empty()) throw parse_error("coloring: missing header line");
  std::vector<long long> head = parse_ints(lines.content[0], "coloring header");
  if (head.size() != 2) throw parse_error("coloring: header must be 'r k'");
  ColorMode mode = ColorMode::young_only;
  for (const std::string& d : lines.directives) {
    std::istringstream in(d);
    std::string key, value;
    if (in >> key >> value && key == "mode")
      mode = value == "full" ? ColorMode::full : ColorMode::young_only;
  }
  AccordantColoring out;
  out.system = enumerate_available_colors(static_cast<int>(head[0]),
                                          static_cast<int>(head[1]), mode);
  int r = static_cast<int>(head[0]);
  for (size_t i = 1; i < lines.content.size(); ++i) {
    std::vector<long long> vs = parse_ints(lines.content[i], "coloring line");
    if (static_cast<int>(vs.size()) != r + 2)
      throw parse_error("coloring: line must be r vertices, color, coset");
    std::vector<int> edge(vs.begin(), vs.begin() + r);
    for (size_t j = 0; j < edge.size(); ++j) {
      if (edge[j] < 1) throw parse_error("coloring: vertex ids must be positive");
      if (j > 0 && edge[j] <= edge[j - 1])
        throw parse_error("coloring: edge vertices must be strictly increasing");
    }
    if (vs[r] < 0 || vs[r] >= static_cast<long long>(out.system->colors.size()))
      throw parse_error("coloring: color index out of range");
    if (vs[r + 1] < 0 || vs[r + 1] >= out.system->colors[vs[r]].coset_count)
      throw parse_error("coloring: coset id out of range");
    ColorValue value{static_cast<int>(vs[r]), static_cast<int>(vs[r + 1])};
    if (!out.assignment.emplace(std::move(edge), value).second)
      throw parse_error("coloring: duplicate edge line");
  }
  return out;
}

std::string emit_walk(const std::vector<int>& walk) {
  std::ostringstream out;
  for (size_t i = 0; i < walk.size(); ++i) out << (i ? " " : "") << walk[i];
  out << '\n';
  return out.str();
}

std::vector<int> parse_walk(const std::string& text) {
  Lines lines = split_lines(text);
  if (lines.content.size() != 1) throw parse_error("walk: expected one line of vertices");
  std::vector<long long> vs = parse_ints(lines.content[0], "walk");
  return {vs.begin(), vs.end()};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file: " + path);
  out << content;
}

}  // namespace tcl
