#include "icol/oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <unordered_set>
#include <utility>

#include "icol/color_set.h"
#include "icol/error.h"

namespace icol {

void CheckOracleLimits(const Graph& g, const OracleLimits& limits) {
  if (g.num_edges() > limits.max_edges) {
    throw Error(ErrorKind::kSizeLimit,
                "graph has " + std::to_string(g.num_edges()) +
                    " edges; exhaustive search is limited to " +
                    std::to_string(limits.max_edges));
  }
}

namespace {

// Backtracking over edges in id order. Star constraints are checked on the
// partial stars: an interval star of degree d must fit in a window of d
// consecutive colors, a cyclic star in an arc of d colors of the cyclic
// palette. Once a star is complete these checks are exact.
class ColoringEnumerator {
 public:
  ColoringEnumerator(const Graph& g, int t, ColoringMode mode,
                     const std::function<bool(const Coloring&)>& visit)
      : g_(g), mode_(mode), visit_(visit), coloring_{t, std::vector<Color>(g.num_edges(), 0)},
        star_bits_(g.num_vertices(), 0), color_use_(t + 1, 0) {}

  int64_t Run() {
    Assign(0);
    return visited_;
  }

 private:
  bool StarFeasible(Vertex x, uint64_t bits) const {
    const int degree = g_.Degree(x);
    switch (mode_) {
      case ColoringMode::kProper:
        return true;
      case ColoringMode::kInterval:
        return 64 - std::countl_zero(bits) - std::countr_zero(bits) <= degree;
      case ColoringMode::kCyclic:
        return CoveringArcLength(bits, coloring_.t) <= degree;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool Assign(int edge_id) {
    const int t = coloring_.t;
    if (edge_id == g_.num_edges()) {
      if (distinct_ != t) return true;
      ++visited_;
      return visit_(coloring_);
    }
    const Edge& edge = g_.edge(edge_id);
    const int remaining_after = g_.num_edges() - edge_id - 1;
    const uint64_t u_bits = star_bits_[edge.u];
    const uint64_t v_bits = star_bits_[edge.v];
    for (Color c = 1; c <= t; ++c) {
      const uint64_t bit = uint64_t{1} << (c - 1);
      if ((u_bits | v_bits) & bit) continue;
      const int distinct = distinct_ + (color_use_[c] == 0 ? 1 : 0);
      if (t - distinct > remaining_after) continue;
      if (!StarFeasible(edge.u, u_bits | bit) ||
          !StarFeasible(edge.v, v_bits | bit)) {
        continue;
      }
      coloring_.colors[edge_id] = c;
      star_bits_[edge.u] = u_bits | bit;
      star_bits_[edge.v] = v_bits | bit;
      if (color_use_[c]++ == 0) ++distinct_;
      bool keep_going = Assign(edge_id + 1);
      if (--color_use_[c] == 0) --distinct_;
      star_bits_[edge.u] = u_bits;
      star_bits_[edge.v] = v_bits;
      coloring_.colors[edge_id] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  ColoringMode mode_;
  const std::function<bool(const Coloring&)>& visit_;
  Coloring coloring_;
  std::vector<uint64_t> star_bits_;
  std::vector<int> color_use_;
  int distinct_ = 0;
  int64_t visited_ = 0;
};

}  // namespace

int64_t EnumerateColorings(const Graph& g, int t, ColoringMode mode,
                           const std::function<bool(const Coloring&)>& visit,
                           const OracleLimits& limits) {
  CheckOracleLimits(g, limits);
  if (g.num_edges() == 0) return 0;
  if (t < 1 || t > g.num_edges() || t > kMaxPalette) {
    throw Error(ErrorKind::kPrecondition,
                "palette size " + std::to_string(t) + " outside [1," +
                    std::to_string(g.num_edges()) + "]");
  }
  return ColoringEnumerator(g, t, mode, visit).Run();
}

int64_t CountColorings(const Graph& g, int t, ColoringMode mode,
                       const OracleLimits& limits) {
  return EnumerateColorings(
      g, t, mode, [](const Coloring&) { return true; }, limits);
}

OracleResult ExactSpectrum(const Graph& g, std::optional<int> t_max,
                           const OracleLimits& limits, std::string graph_id) {
  CheckOracleLimits(g, limits);
  OracleResult result;
  result.graph_id = std::move(graph_id);
  result.num_edges = g.num_edges();
  const int last = t_max.value_or(g.num_edges());
  for (int t = 1; t <= last; ++t) {
    PaletteCounts counts{.t = t};
    if (t <= g.num_edges()) {
      // One pass over the proper colorings, classifying each complete one.
      counts.proper = EnumerateColorings(
          g, t, ColoringMode::kProper,
          [&](const Coloring& c) {
            bool interval = true;
            bool cyclic = true;
            for (Vertex x = 0; x < g.num_vertices() && cyclic; ++x) {
              uint64_t bits = 0;
              for (EdgeId e : g.IncidentEdges(x)) {
                bits |= uint64_t{1} << (c.colors[e] - 1);
              }
              ColorSet star = ColorSet::FromBits(t, bits);
              interval = interval && IsInterval(star);
              cyclic = IsCyclicInterval(star);
            }
            counts.interval += interval && cyclic;
            counts.cyclic += cyclic;
            return true;
          },
          limits);
    }
    if (counts.interval > 0) result.theta.push_back(t);
    if (counts.cyclic > 0) result.theta_cyc.push_back(t);
    result.counts.push_back(counts);
  }
  return result;
}

SpectrumReport SpectrumFromOracle(const Graph& g, const OracleResult& result) {
  SpectrumReport report;
  report.num_edges = g.num_edges();
  report.delta = MaxDegree(g);
  for (const PaletteCounts& counts : result.counts) {
    if (counts.proper > 0) {
      report.chi_prime = counts.t;
      break;
    }
  }
  if (IsTree(g) && g.num_edges() > 0) {
    PathBound bound = MaxPathStarSize(g);
    report.m_of_h = bound.value;
    report.m_witness = bound;
  }
  report.theta = result.theta;
  report.theta_cyc = result.theta_cyc;
  if (!result.theta.empty()) {
    report.w_int = result.theta.front();
    report.W_int = result.theta.back();
  }
  if (!result.theta_cyc.empty()) {
    report.w_cyc = result.theta_cyc.front();
    report.W_cyc = result.theta_cyc.back();
  }
  report.provenance = Provenance::kOracle;
  return report;
}

ColorSet InternalStarColors(const Graph& g, const Coloring& c,
                            const PathData& path) {
  ColorSet out(c.t);
  for (Vertex x : path.internal_vertices) {
    out = out.Union(StarColors(g, c, x));
  }
  return out;
}

namespace {

void RequireCyclic(const Graph& g, const Coloring& c) {
  if (!IsCyclicColoring(g, c)) {
    throw Error(ErrorKind::kPrecondition,
                "coloring is not cyclically-interval");
  }
}

void RequireLongPath(const PathData& path) {
  if (path.length() < 2) {
    throw Error(ErrorKind::kPrecondition, "path needs at least two edges");
  }
}

}  // namespace

bool HoldsInternalStarsCyclic(const Graph& g, const Coloring& c,
                              const PathData& path) {
  RequireCyclic(g, c);
  RequireLongPath(path);
  return IsCyclicInterval(InternalStarColors(g, c, path));
}

bool HoldsSegmentCovered(const Graph& g, const Coloring& c,
                         const PathData& path) {
  RequireCyclic(g, c);
  RequireLongPath(path);
  ColorSet covered = InternalStarColors(g, c, path);
  Color first = c.colors[path.edges.front()];
  Color last = c.colors[path.edges.back()];
  return CyclicSegmentOpen1(first, last, c.t).IsSubsetOf(covered) ||
         CyclicSegmentOpen2(first, last, c.t).IsSubsetOf(covered);
}

namespace {

void RequireTree(const Graph& g) {
  if (!IsTree(g)) throw Error(ErrorKind::kNotTree, "graph is not a tree");
}

}  // namespace

bool HoldsPalettePathStar(const Graph& tree, const Coloring& c) {
  RequireTree(tree);
  RequireCyclic(tree, c);
  const ColorSet full = ColorSet::Full(c.t);
  for (Vertex a = 0; a < tree.num_vertices(); ++a) {
    for (Vertex b = a; b < tree.num_vertices(); ++b) {
      if (ColorsOf(tree, c, TreePath(tree, a, b).star_edges) == full) {
        return true;
      }
    }
  }
  return false;
}

bool HoldsPathStarBound(const Graph& tree, const Coloring& c) {
  RequireTree(tree);
  RequireCyclic(tree, c);
  for (Vertex a = 0; a < tree.num_vertices(); ++a) {
    for (Vertex b = a; b < tree.num_vertices(); ++b) {
      if (static_cast<int>(TreePath(tree, a, b).star_edges.size()) >= c.t) {
        return true;
      }
    }
  }
  return false;
}

Graph TreeFromPrufer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) {
      throw Error(ErrorKind::kOutOfRange,
                  "Pruefer entry " + std::to_string(x) + " outside [0," +
                      std::to_string(n - 1) + "]");
    }
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : sequence) {
    Vertex leaf = static_cast<Vertex>(std::ranges::find(degree, 1) - degree.begin());
    edges.push_back({leaf, x});
    degree[leaf] = 0;
    --degree[x];
  }
  Vertex u = static_cast<Vertex>(std::ranges::find(degree, 1) - degree.begin());
  Vertex v = static_cast<Vertex>(std::find(degree.begin() + u + 1, degree.end(), 1) -
                                 degree.begin());
  edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

namespace {

std::string RootedForm(const Graph& tree, Vertex x, Vertex parent) {
  std::vector<std::string> children;
  for (EdgeId e : tree.IncidentEdges(x)) {
    Vertex y = tree.edge(e).Other(x);
    if (y != parent) children.push_back(RootedForm(tree, y, x));
  }
  std::ranges::sort(children);
  std::string out = "(";
  for (const std::string& child : children) out += child;
  return out + ")";
}

// Vertices of minimum eccentricity (one or two of them).
std::vector<Vertex> TreeCenters(const Graph& tree) {
  const int n = tree.num_vertices();
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex x = 0; x < n; ++x) {
    degree[x] = tree.Degree(x);
    if (degree[x] <= 1) layer.push_back(x);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex x : layer) {
      for (EdgeId e : tree.IncidentEdges(x)) {
        Vertex y = tree.edge(e).Other(x);
        if (--degree[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

// Catalog sizes where full Prüfer enumeration (n^(n-2) sequences) stays
// cheap; larger sizes grow the catalog by attaching leaves.
constexpr int kPruferMaxEdges = 8;
constexpr int kPruferMaxVertices = kPruferMaxEdges + 1;

// Allocation-free adjacency for the Prüfer sweep.
struct SmallTree {
  int n = 0;
  std::array<int, kPruferMaxVertices> degree{};
  std::array<std::array<int, kPruferMaxVertices>, kPruferMaxVertices> adj{};

  void Link(int u, int v) {
    adj[u][degree[u]++] = v;
    adj[v][degree[v]++] = u;
  }
};

void DecodePrufer(std::span<const int> sequence, SmallTree& tree) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::array<int, kPruferMaxVertices> remaining{};
  remaining.fill(1);
  for (int x : sequence) ++remaining[x];
  tree.n = n;
  tree.degree.fill(0);
  for (int x : sequence) {
    int leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    tree.Link(leaf, x);
    remaining[leaf] = 0;
    --remaining[x];
  }
  int u = 0;
  while (remaining[u] != 1) ++u;
  int v = u + 1;
  while (remaining[v] != 1) ++v;
  tree.Link(u, v);
}

// Balanced-parenthesis code of the subtree at x as (length, bits), children
// ordered by their own codes. Injective on rooted trees up to isomorphism.
std::pair<int, uint64_t> RootedCode(const SmallTree& tree, int x, int parent) {
  std::array<std::pair<int, uint64_t>, kPruferMaxVertices> children;
  int count = 0;
  for (int i = 0; i < tree.degree[x]; ++i) {
    int y = tree.adj[x][i];
    if (y != parent) children[count++] = RootedCode(tree, y, x);
  }
  std::sort(children.begin(), children.begin() + count);
  int length = 1;
  uint64_t bits = 1;
  for (int i = 0; i < count; ++i) {
    bits = (bits << children[i].first) | children[i].second;
    length += children[i].first;
  }
  return {length + 1, bits << 1};
}

uint64_t CanonicalKey(const SmallTree& tree) {
  std::array<int, kPruferMaxVertices> degree = tree.degree;
  std::array<int, kPruferMaxVertices> layer;
  int layer_size = 0;
  for (int x = 0; x < tree.n; ++x) {
    if (degree[x] <= 1) layer[layer_size++] = x;
  }
  int left = tree.n;
  while (left > 2) {
    left -= layer_size;
    std::array<int, kPruferMaxVertices> next;
    int next_size = 0;
    for (int i = 0; i < layer_size; ++i) {
      int x = layer[i];
      for (int j = 0; j < tree.degree[x]; ++j) {
        int y = tree.adj[x][j];
        if (--degree[y] == 1) next[next_size++] = y;
      }
    }
    layer = next;
    layer_size = next_size;
  }
  uint64_t best = ~uint64_t{0};
  for (int i = 0; i < layer_size; ++i) {
    best = std::min(best, RootedCode(tree, layer[i], -1).second);
  }
  return best;
}

std::vector<Graph> ClassesFromPrufer(int num_edges) {
  const int n = num_edges + 1;
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<std::pair<std::string, Graph>> found;
  std::unordered_set<uint64_t> seen;
  std::vector<int> sequence(n - 2, 0);
  SmallTree small;
  while (true) {
    DecodePrufer(sequence, small);
    if (seen.insert(CanonicalKey(small)).second) {
      Graph tree = TreeFromPrufer(sequence);
      std::string form = CanonicalTreeForm(tree);
      found.emplace_back(std::move(form), std::move(tree));
    }
    int pos = n - 3;
    while (pos >= 0 && ++sequence[pos] == n) sequence[pos--] = 0;
    if (pos < 0) break;
  }
  std::ranges::sort(found, {}, &std::pair<std::string, Graph>::first);
  std::vector<Graph> out;
  for (auto& [form, tree] : found) out.push_back(std::move(tree));
  return out;
}

std::vector<Graph> ClassesByLeafExtension(const std::vector<Graph>& smaller) {
  std::vector<std::pair<std::string, Graph>> found;
  std::vector<std::string> seen;
  for (const Graph& base : smaller) {
    for (Vertex x = 0; x < base.num_vertices(); ++x) {
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      edges.push_back({x, base.num_vertices()});
      Graph tree(base.num_vertices() + 1, std::move(edges));
      std::string form = CanonicalTreeForm(tree);
      auto it = std::ranges::lower_bound(seen, form);
      if (it == seen.end() || *it != form) {
        seen.insert(it, form);
        found.emplace_back(std::move(form), std::move(tree));
      }
    }
  }
  std::ranges::sort(found, {}, &std::pair<std::string, Graph>::first);
  std::vector<Graph> out;
  for (auto& [form, tree] : found) out.push_back(std::move(tree));
  return out;
}

}  // namespace

std::string CanonicalTreeForm(const Graph& tree) {
  RequireTree(tree);
  std::string best;
  for (Vertex center : TreeCenters(tree)) {
    std::string form = RootedForm(tree, center, -1);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

std::vector<Graph> TreeCatalog(int max_edges, const OracleLimits& limits) {
  if (max_edges > limits.max_edges) {
    throw Error(ErrorKind::kSizeLimit,
                "catalog size " + std::to_string(max_edges) +
                    " exceeds the oracle edge limit " +
                    std::to_string(limits.max_edges));
  }
  std::vector<Graph> catalog;
  std::vector<Graph> previous;
  for (int m = 1; m <= max_edges; ++m) {
    previous = m <= kPruferMaxEdges ? ClassesFromPrufer(m)
                                    : ClassesByLeafExtension(previous);
    catalog.insert(catalog.end(), previous.begin(), previous.end());
  }
  return catalog;
}

}  // namespace icol
