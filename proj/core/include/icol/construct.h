#ifndef ICOL_CONSTRUCT_H_
#define ICOL_CONSTRUCT_H_

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "icol/coloring.h"
#include "icol/graph.h"

namespace icol {

struct ConstructionRequest {
  int t = 1;
  ColoringMode mode = ColoringMode::kInterval;
};

// Why a tree has no coloring of the requested kind with t colors.
struct Infeasibility {
  enum class Reason {
    kBelowMaxDegree,  // some star needs more than t colors
    kAboveBound,      // t exceeds the largest path star
  };
  Reason reason;
  int t;
  // The feasible range [min_t, max_t].
  int min_t;
  int max_t;

  std::string Describe() const;
};

using ConstructionResult = std::variant<Coloring, Infeasibility>;

enum class ConstructStrategy {
  kAuto,        // greedy first, search when greedy fails
  kGreedyOnly,  // greedy tier alone
  kSearchOnly,  // backtracking only
};

// Builds an interval t-coloring of a tree for any t in [Δ, M]. For trees an
// interval coloring is also cyclically-interval, and no other t admits either
// kind, so `mode` does not change the outcome. Feasibility is decided from Δ
// and M before any search. Every returned coloring has passed CheckInterval.
// Throws kNotTree, kEdgeless, or kPrecondition when t > kMaxPalette lies in
// the feasible range. std::logic_error if the selected tiers find nothing
// inside the feasible range.
ConstructionResult Construct(const Graph& tree, const ConstructionRequest& req,
                             ConstructStrategy strategy = ConstructStrategy::kAuto);

// One coloring per feasible t.
std::map<int, Coloring> ConstructAllT(const Graph& tree);

// Greedy tier. Spreads the palette along a path attaining M, then gives
// every remaining vertex a block of deg(x) consecutive colors containing the
// color of the edge it was reached by. nullopt if the result does not verify.
std::optional<Coloring> ConstructGreedy(const Graph& tree, int t);

// Search tier. Depth-first backtracking over the edges in DFS discovery
// order; each partial star must stay within a window of deg(x) colors and
// the unused colors must not outnumber the uncolored edges. Colors are tried
// in ascending order so the first solution found is deterministic.
std::optional<Coloring> ConstructBySearch(const Graph& tree, int t);

}  // namespace icol

#endif  // ICOL_CONSTRUCT_H_
