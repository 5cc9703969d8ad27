#include "icol/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "icol/error.h"
#include "json.hpp"

namespace icol {

using nlohmann::json;

namespace {

json ParseJsonText(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

int RequireInt(const json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorKind::kParse, what + " must be an integer");
  }
  return value.get<int>();
}

json SpectrumJson(const PaletteSizes& s) {
  if (IsContiguous(s)) return {{"interval", {s.front(), s.back()}}};
  return {{"set", s}};
}

}  // namespace

Graph ParseGraphJson(std::string_view text) {
  json doc = ParseJsonText(text);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorKind::kParse, "graph JSON needs an \"edges\" array");
  }
  std::vector<Edge> edges;
  int max_index = -1;
  for (const json& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorKind::kParse, "each edge must be a [u, v] pair");
    }
    Edge e{RequireInt(pair[0], "vertex"), RequireInt(pair[1], "vertex")};
    max_index = std::max({max_index, e.u, e.v});
    edges.push_back(e);
  }
  int n = doc.contains("n") ? RequireInt(doc["n"], "\"n\"") : max_index + 1;
  return Graph(n, std::move(edges));
}

Graph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  int max_index = -1;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::string rest;
    Edge e{};
    if (!(fields >> e.u)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_number) + ": expected \"u v\"");
    }
    if (!(fields >> e.v) || (fields >> rest)) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_number) + ": expected \"u v\"");
    }
    max_index = std::max({max_index, e.u, e.v});
    edges.push_back(e);
  }
  if (edges.empty()) {
    throw Error(ErrorKind::kParse, "edge list has no edges");
  }
  return Graph(max_index + 1, std::move(edges));
}

Graph ParseGraph(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return ParseGraphJson(text);
  }
  return ParseEdgeList(text);
}

std::string DumpGraphJson(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::ordered_json{{"n", g.num_vertices()}, {"edges", edges}}.dump() + "\n";
}

std::string DumpEdgeList(const Graph& g) {
  if (g.num_edges() == 0) {
    throw Error(ErrorKind::kPrecondition,
                "an edgeless graph has no edge-list form");
  }
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Coloring ParseColoringJson(std::string_view text) {
  json doc = ParseJsonText(text);
  if (!doc.is_object() || !doc.contains("t") || !doc.contains("colors") ||
      !doc["colors"].is_array()) {
    throw Error(ErrorKind::kParse,
                "coloring JSON needs \"t\" and a \"colors\" array");
  }
  Coloring c;
  c.t = RequireInt(doc["t"], "\"t\"");
  for (const json& color : doc["colors"]) {
    c.colors.push_back(RequireInt(color, "color"));
  }
  return c;
}

std::string DumpColoringJson(const Coloring& c) {
  return nlohmann::ordered_json{{"t", c.t}, {"colors", c.colors}}.dump() + "\n";
}

std::string DumpSpectrumReportJson(const SpectrumReport& report) {
  // ordered_json keeps the field order stable and readable.
  nlohmann::ordered_json doc;
  doc["num_edges"] = report.num_edges;
  doc["delta"] = report.delta;
  if (report.chi_prime) doc["chi_prime"] = *report.chi_prime;
  if (report.m_of_h) doc["m_of_h"] = *report.m_of_h;
  if (report.m_witness) {
    doc["m_witness"] = {report.m_witness->first, report.m_witness->second};
  }
  if (report.theta) doc["theta"] = SpectrumJson(*report.theta);
  if (report.theta_cyc) doc["theta_cyc"] = SpectrumJson(*report.theta_cyc);
  if (report.w_int) doc["w_int"] = *report.w_int;
  if (report.W_int) doc["W_int"] = *report.W_int;
  if (report.w_cyc) doc["w_cyc"] = *report.w_cyc;
  if (report.W_cyc) doc["W_cyc"] = *report.W_cyc;
  doc["provenance"] = ProvenanceName(report.provenance);
  return doc.dump() + "\n";
}

std::string DumpOracleResultJson(const OracleResult& result) {
  nlohmann::ordered_json doc;
  doc["graph_id"] = result.graph_id;
  doc["num_edges"] = result.num_edges;
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (const PaletteCounts& c : result.counts) {
    counts.push_back({{"t", c.t},
                      {"proper", c.proper},
                      {"interval", c.interval},
                      {"cyclic", c.cyclic}});
  }
  doc["counts"] = counts;
  doc["theta"] = SpectrumJson(result.theta);
  doc["theta_cyc"] = SpectrumJson(result.theta_cyc);
  return doc.dump() + "\n";
}

std::string DumpDot(const Graph& g, const std::optional<Coloring>& coloring) {
  if (coloring) ValidateColoring(g, *coloring);
  std::string out = "graph G {\n";
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    out += "  " + std::to_string(x) + ";\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out += "  " + std::to_string(g.edge(e).u) + " -- " +
           std::to_string(g.edge(e).v);
    if (coloring) {
      out += " [label=\"" + std::to_string(coloring->colors[e]) + "\"]";
    }
    out += ";\n";
  }
  return out + "}\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace icol
