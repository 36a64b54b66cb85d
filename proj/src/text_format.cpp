#include "tubular/text_format.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "tubular/error.hpp"

namespace tubular {

namespace {

const std::regex kVertex(R"(^\s*vertex\s+([A-Za-z0-9_.\-]+)\s*$)");
const std::regex kEdge(
    R"(^\s*edge\s+([A-Za-z0-9_.\-]+)\s*:\s*([A-Za-z0-9_.\-]+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*->\s*([A-Za-z0-9_.\-]+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$)");
const std::regex kBlank(R"(^\s*$)");

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

TubularGraph parse_graph(const std::string& text) {
  TubularGraph g;
  std::set<std::string> edge_names;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, kBlank)) continue;
    if (std::regex_match(line, m, kVertex)) {
      if (g.find_vertex(m[1])) fail(line_no, "duplicate vertex " + m[1].str());
      g.vertices.push_back(m[1]);
      continue;
    }
    if (std::regex_match(line, m, kEdge)) {
      Edge e;
      e.name = m[1];
      if (!edge_names.insert(e.name).second) fail(line_no, "duplicate edge " + e.name);
      auto src = g.find_vertex(m[2]);
      auto dst = g.find_vertex(m[5]);
      if (!src) fail(line_no, "undeclared vertex " + m[2].str());
      if (!dst) fail(line_no, "undeclared vertex " + m[5].str());
      e.src = *src;
      e.dst = *dst;
      e.inc_src = {Integer(m[3].str()), Integer(m[4].str())};
      e.inc_dst = {Integer(m[6].str()), Integer(m[7].str())};
      g.edges.push_back(std::move(e));
      continue;
    }
    fail(line_no, "cannot parse '" + line + "'");
  }
  return g;
}

std::string serialize_graph(const TubularGraph& g) {
  std::ostringstream os;
  for (const std::string& v : g.vertices) os << "vertex " << v << "\n";
  for (const Edge& e : g.edges)
    os << "edge " << e.name << ": " << g.vertices[e.src] << "(" << e.inc_src.p << "," << e.inc_src.q << ") -> "
       << g.vertices[e.dst] << "(" << e.inc_dst.p << "," << e.inc_dst.q << ")\n";
  return os.str();
}

}  // namespace tubular
