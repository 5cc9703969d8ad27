#include "icol/construct.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>

#include "icol/error.h"
#include "icol/invariants.h"

namespace icol {

std::string Infeasibility::Describe() const {
  std::string why = reason == Reason::kBelowMaxDegree
                        ? "t=" + std::to_string(t) +
                              " is below the maximum degree"
                        : "t=" + std::to_string(t) +
                              " exceeds the largest path star";
  return why + "; feasible range [" + std::to_string(min_t) + "," +
         std::to_string(max_t) + "]";
}

namespace {

// Colors the uncolored edges at x with the block [lo, lo + deg - 1] minus
// the colors already present, in ascending edge-id order.
// Returns false if a present color lies outside the block.
bool FillBlock(const Graph& tree, Vertex x, Color lo, std::vector<Color>& colors) {
  std::span<const EdgeId> star = tree.IncidentEdges(x);
  const int width = static_cast<int>(star.size());
  std::vector<bool> taken(width, false);
  for (EdgeId e : star) {
    if (colors[e] == 0) continue;
    if (colors[e] < lo || colors[e] >= lo + width) return false;
    taken[colors[e] - lo] = true;
  }
  Color next = lo;
  for (EdgeId e : star) {
    if (colors[e] != 0) continue;
    while (taken[next - lo]) ++next;
    colors[e] = next++;
  }
  return true;
}

}  // namespace

std::optional<Coloring> ConstructGreedy(const Graph& tree, int t) {
  if (t < MaxDegree(tree) || t > kMaxPalette) return std::nullopt;
  std::vector<Color> colors(tree.num_edges(), 0);
  PathBound bound = MaxPathStarSize(tree);
  PathData spine = TreePath(tree, bound.first, bound.second);

  // Walk the spine pushing each outgoing color as high as the palette
  // allows; the blocks chain together and cover [1, min(t, M)].
  colors[spine.edges.front()] = 1;
  for (int i = 1; i < spine.length(); ++i) {
    Vertex x = spine.vertices[i];
    int degree = tree.Degree(x);
    Color in = colors[spine.edges[i - 1]];
    Color lo = std::max(1, std::min(in, t - degree + 1));
    Color hi = lo + degree - 1;
    // The last edge ends the spine, so any free color of the block will do.
    if (i + 1 < spine.length()) colors[spine.edges[i]] = hi != in ? hi : hi - 1;
    if (!FillBlock(tree, x, lo, colors)) return std::nullopt;
  }

  // Every other vertex is reached through exactly one colored edge and gets
  // the block ending at that color, clamped at 1.
  std::vector<bool> visited(tree.num_vertices(), false);
  std::deque<Vertex> queue(spine.vertices.begin(), spine.vertices.end());
  for (Vertex x : spine.vertices) visited[x] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    std::span<const EdgeId> star = tree.IncidentEdges(x);
    int fresh = 0;
    Color anchor = 0;
    for (EdgeId e : star) {
      if (colors[e] == 0) {
        ++fresh;
      } else {
        anchor = colors[e];
      }
    }
    if (fresh > 0) {
      int degree = static_cast<int>(star.size());
      if (fresh + 1 != degree) return std::nullopt;
      if (!FillBlock(tree, x, std::max(1, anchor - degree + 1), colors)) {
        return std::nullopt;
      }
    }
    for (EdgeId e : star) {
      Vertex y = tree.edge(e).Other(x);
      if (!visited[y]) {
        visited[y] = true;
        queue.push_back(y);
      }
    }
  }

  Coloring result{t, std::move(colors)};
  if (std::ranges::any_of(result.colors, [t](Color c) { return c < 1 || c > t; }) ||
      !CheckInterval(tree, result)) {
    return std::nullopt;
  }
  return result;
}

namespace {

class IntervalSearch {
 public:
  IntervalSearch(const Graph& tree, int t)
      : tree_(tree), t_(t), colors_(tree.num_edges(), 0),
        star_bits_(tree.num_vertices(), 0),
        color_use_(t + 1, 0) {
    // Edges in DFS discovery order from vertex 0, smallest edge id first.
    std::vector<bool> seen(tree.num_vertices(), false);
    std::vector<bool> queued(tree.num_edges(), false);
    std::vector<Vertex> stack{0};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = true;
      std::span<const EdgeId> star = tree.IncidentEdges(x);
      for (auto it = star.rbegin(); it != star.rend(); ++it) {
        Vertex y = tree.edge(*it).Other(x);
        if (!seen[y]) stack.push_back(y);
      }
      for (EdgeId e : star) {
        if (seen[tree.edge(e).Other(x)] && !queued[e]) {
          queued[e] = true;
          order_.push_back(e);
        }
      }
    }
  }

  std::optional<Coloring> Run() {
    if (Assign(0)) return Coloring{t_, colors_};
    return std::nullopt;
  }

 private:
  bool Fits(Vertex x, uint64_t bits) const {
    int span = 64 - std::countl_zero(bits) - std::countr_zero(bits);
    return span <= tree_.Degree(x);
  }

  bool Assign(size_t index) {
    if (index == order_.size()) return distinct_ == t_;
    const Edge& edge = tree_.edge(order_[index]);
    int remaining = static_cast<int>(order_.size() - index);
    for (Color c = 1; c <= t_; ++c) {
      uint64_t bit = uint64_t{1} << (c - 1);
      uint64_t u_bits = star_bits_[edge.u];
      uint64_t v_bits = star_bits_[edge.v];
      if ((u_bits | v_bits) & bit) continue;
      if (!Fits(edge.u, u_bits | bit) || !Fits(edge.v, v_bits | bit)) continue;
      int distinct = distinct_ + (color_use_[c] == 0 ? 1 : 0);
      if (t_ - distinct > remaining - 1) continue;

      colors_[order_[index]] = c;
      star_bits_[edge.u] |= bit;
      star_bits_[edge.v] |= bit;
      if (color_use_[c]++ == 0) ++distinct_;
      if (Assign(index + 1)) return true;
      if (--color_use_[c] == 0) --distinct_;
      star_bits_[edge.u] = u_bits;
      star_bits_[edge.v] = v_bits;
      colors_[order_[index]] = 0;
    }
    return false;
  }

  const Graph& tree_;
  int t_;
  std::vector<EdgeId> order_;
  std::vector<Color> colors_;
  std::vector<uint64_t> star_bits_;
  std::vector<int> color_use_;
  int distinct_ = 0;
};

}  // namespace

std::optional<Coloring> ConstructBySearch(const Graph& tree, int t) {
  if (!IsTree(tree)) throw Error(ErrorKind::kNotTree, "graph is not a tree");
  if (t < 1 || t > kMaxPalette) return std::nullopt;
  return IntervalSearch(tree, t).Run();
}

ConstructionResult Construct(const Graph& tree, const ConstructionRequest& req,
                             ConstructStrategy strategy) {
  SpectrumReport spectrum = SpectrumTree(tree);
  const int lo = spectrum.delta;
  const int hi = *spectrum.m_of_h;
  if (req.t < lo) {
    return Infeasibility{Infeasibility::Reason::kBelowMaxDegree, req.t, lo, hi};
  }
  if (req.t > hi) {
    return Infeasibility{Infeasibility::Reason::kAboveBound, req.t, lo, hi};
  }
  if (req.t > kMaxPalette) {
    throw Error(ErrorKind::kPrecondition,
                "palette size " + std::to_string(req.t) +
                    " exceeds the supported maximum " +
                    std::to_string(kMaxPalette));
  }

  std::optional<Coloring> coloring;
  if (strategy != ConstructStrategy::kSearchOnly) {
    coloring = ConstructGreedy(tree, req.t);
  }
  if (!coloring && strategy != ConstructStrategy::kGreedyOnly) {
    coloring = ConstructBySearch(tree, req.t);
  }
  if (!coloring || !CheckInterval(tree, *coloring)) {
    throw std::logic_error("no interval " + std::to_string(req.t) +
                           "-coloring found inside the feasible range");
  }
  return *coloring;
}

std::map<int, Coloring> ConstructAllT(const Graph& tree) {
  SpectrumReport spectrum = SpectrumTree(tree);
  std::map<int, Coloring> out;
  for (int t = spectrum.delta; t <= *spectrum.m_of_h; ++t) {
    out.emplace(t, std::get<Coloring>(Construct(tree, {.t = t})));
  }
  return out;
}

}  // namespace icol
