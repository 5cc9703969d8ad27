#ifndef ICOL_COLORING_H_
#define ICOL_COLORING_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icol/color_set.h"
#include "icol/graph.h"

namespace icol {

// An assignment of a color in [1, t] to every edge, indexed by edge id.
struct Coloring {
  int t = 0;
  std::vector<Color> colors;

  bool operator==(const Coloring&) const = default;
};

enum class ColoringMode { kProper, kInterval, kCyclic };

const char* ColoringModeName(ColoringMode mode);
// "proper" | "interval" | "cyclic"; throws kParse on anything else.
ColoringMode ParseColoringMode(const std::string& name);

// Throws kPrecondition unless c has one color per edge of g, 1 <= t <= 64
// and every color lies in [1, t].
void ValidateColoring(const Graph& g, const Coloring& c);

// The set of colors on `edge_ids`. Throws kOutOfRange on an unknown edge.
ColorSet ColorsOf(const Graph& g, const Coloring& c,
                  std::span<const EdgeId> edge_ids);

// Color set of the star J(x).
ColorSet StarColors(const Graph& g, const Coloring& c, Vertex x);

// First reason a coloring fails a check.
struct Violation {
  enum class Kind {
    kAdjacentClash,   // edges `first_edge` and `second_edge` share `vertex`
    kUnusedColor,     // `color` appears on no edge
    kNotInterval,     // star of `vertex` is not a deg(vertex)-interval
    kNotCyclicInterval,
  };
  Kind kind;
  Vertex vertex = -1;
  EdgeId first_edge = -1;
  EdgeId second_edge = -1;
  Color color = 0;
  // Star colors of `vertex` for the star checks.
  std::optional<ColorSet> star;

  std::string Describe() const;
};

struct Verdict {
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

// Adjacent edges differ and every color of [1, t] is used. Vertices are
// scanned ascending, so the reported witness is deterministic.
Verdict CheckProper(const Graph& g, const Coloring& c);
// Proper, and each star's colors form an interval of size deg(x).
Verdict CheckInterval(const Graph& g, const Coloring& c);
// Proper, and each star's colors form a t-cyclic interval.
Verdict CheckCyclic(const Graph& g, const Coloring& c);
Verdict Check(const Graph& g, const Coloring& c, ColoringMode mode);

inline bool IsProper(const Graph& g, const Coloring& c) {
  return CheckProper(g, c).ok();
}
inline bool IsIntervalColoring(const Graph& g, const Coloring& c) {
  return CheckInterval(g, c).ok();
}
inline bool IsCyclicColoring(const Graph& g, const Coloring& c) {
  return CheckCyclic(g, c).ok();
}

}  // namespace icol

#endif  // ICOL_COLORING_H_
