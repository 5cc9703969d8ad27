#include "icol/coloring.h"

#include <string>

#include "icol/error.h"

namespace icol {

const char* ColoringModeName(ColoringMode mode) {
  switch (mode) {
    case ColoringMode::kProper: return "proper";
    case ColoringMode::kInterval: return "interval";
    case ColoringMode::kCyclic: return "cyclic";
  }
  return "unknown";
}

ColoringMode ParseColoringMode(const std::string& name) {
  if (name == "proper") return ColoringMode::kProper;
  if (name == "interval") return ColoringMode::kInterval;
  if (name == "cyclic") return ColoringMode::kCyclic;
  throw Error(ErrorKind::kParse, "unknown coloring mode '" + name + "'");
}

void ValidateColoring(const Graph& g, const Coloring& c) {
  if (c.t < 1 || c.t > kMaxPalette) {
    throw Error(ErrorKind::kPrecondition,
                "palette size " + std::to_string(c.t) + " outside [1," +
                    std::to_string(kMaxPalette) + "]");
  }
  if (static_cast<int>(c.colors.size()) != g.num_edges()) {
    throw Error(ErrorKind::kPrecondition,
                "coloring has " + std::to_string(c.colors.size()) +
                    " colors for " + std::to_string(g.num_edges()) + " edges");
  }
  for (size_t e = 0; e < c.colors.size(); ++e) {
    if (c.colors[e] < 1 || c.colors[e] > c.t) {
      throw Error(ErrorKind::kPrecondition,
                  "edge " + std::to_string(e) + " has color " +
                      std::to_string(c.colors[e]) + " outside [1," +
                      std::to_string(c.t) + "]");
    }
  }
}

ColorSet ColorsOf(const Graph& g, const Coloring& c,
                  std::span<const EdgeId> edge_ids) {
  ValidateColoring(g, c);
  ColorSet out(c.t);
  for (EdgeId e : edge_ids) {
    g.edge(e);
    out.Insert(c.colors[e]);
  }
  return out;
}

ColorSet StarColors(const Graph& g, const Coloring& c, Vertex x) {
  return ColorsOf(g, c, g.IncidentEdges(x));
}

std::string Violation::Describe() const {
  std::string star_text = star ? star->ToString() : "{}";
  switch (kind) {
    case Kind::kAdjacentClash:
      return "edges " + std::to_string(first_edge) + " and " +
             std::to_string(second_edge) + " share vertex " +
             std::to_string(vertex) + " and both have color " +
             std::to_string(color);
    case Kind::kUnusedColor:
      return "color " + std::to_string(color) + " is not used";
    case Kind::kNotInterval:
      return "vertex " + std::to_string(vertex) + " has star colors " +
             star_text + ", not an interval";
    case Kind::kNotCyclicInterval:
      return "vertex " + std::to_string(vertex) + " has star colors " +
             star_text + ", not a cyclic interval";
  }
  return "unknown violation";
}

Verdict CheckProper(const Graph& g, const Coloring& c) {
  ValidateColoring(g, c);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    std::span<const EdgeId> star = g.IncidentEdges(x);
    for (size_t i = 0; i < star.size(); ++i) {
      for (size_t j = i + 1; j < star.size(); ++j) {
        if (c.colors[star[i]] == c.colors[star[j]]) {
          return {Violation{.kind = Violation::Kind::kAdjacentClash,
                            .vertex = x,
                            .first_edge = star[i],
                            .second_edge = star[j],
                            .color = c.colors[star[i]],
                            .star = std::nullopt}};
        }
      }
    }
  }
  ColorSet used(c.t, c.colors);
  ColorSet missing = used.Complement();
  if (!missing.empty()) {
    return {Violation{.kind = Violation::Kind::kUnusedColor,
                      .color = missing.Min(),
                      .star = std::nullopt}};
  }
  return {};
}

Verdict CheckInterval(const Graph& g, const Coloring& c) {
  if (Verdict v = CheckProper(g, c); !v) return v;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    ColorSet star = StarColors(g, c, x);
    if (!IsInterval(star) || star.size() != g.Degree(x)) {
      return {Violation{.kind = Violation::Kind::kNotInterval,
                        .vertex = x,
                        .star = star}};
    }
  }
  return {};
}

Verdict CheckCyclic(const Graph& g, const Coloring& c) {
  if (Verdict v = CheckProper(g, c); !v) return v;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    ColorSet star = StarColors(g, c, x);
    if (!IsCyclicInterval(star)) {
      return {Violation{.kind = Violation::Kind::kNotCyclicInterval,
                        .vertex = x,
                        .star = star}};
    }
  }
  return {};
}

Verdict Check(const Graph& g, const Coloring& c, ColoringMode mode) {
  switch (mode) {
    case ColoringMode::kProper: return CheckProper(g, c);
    case ColoringMode::kInterval: return CheckInterval(g, c);
    case ColoringMode::kCyclic: return CheckCyclic(g, c);
  }
  return CheckProper(g, c);
}

}  // namespace icol
