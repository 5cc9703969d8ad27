#ifndef ICOL_ORACLE_H_
#define ICOL_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icol/coloring.h"
#include "icol/graph.h"
#include "icol/invariants.h"

namespace icol {

// Exhaustive search over edge colorings. Meant for small graphs only; the
// edge limit is enforced as a hard error.
inline constexpr int kDefaultOracleEdgeLimit = 10;

struct OracleLimits {
  int max_edges = kDefaultOracleEdgeLimit;
};

// Throws kSizeLimit if g has more edges than the limit.
void CheckOracleLimits(const Graph& g, const OracleLimits& limits);

// Visits every proper t-coloring of g (all t colors used) that also satisfies
// `mode`, in lexicographic order of the color vector indexed by edge id.
// Returning false from `visit` stops the enumeration. Returns the number of
// colorings visited. Throws kSizeLimit, or kPrecondition when t is outside
// [1, |E|] (no proper surjective coloring exists there) for graphs with edges.
int64_t EnumerateColorings(const Graph& g, int t, ColoringMode mode,
                           const std::function<bool(const Coloring&)>& visit,
                           const OracleLimits& limits = {});

int64_t CountColorings(const Graph& g, int t, ColoringMode mode,
                       const OracleLimits& limits = {});

struct PaletteCounts {
  int t = 0;
  int64_t proper = 0;
  int64_t interval = 0;
  int64_t cyclic = 0;
};

struct OracleResult {
  std::string graph_id;
  int num_edges = 0;
  std::vector<PaletteCounts> counts;  // t = 1..t_max
  PaletteSizes theta;      // t with an interval t-coloring
  PaletteSizes theta_cyc;  // t with a cyclically-interval t-coloring
};

// Exact spectra over t in [1, t_max]. t_max defaults to |E|, beyond which no
// proper coloring uses every color, so the default result is complete.
// Throws kSizeLimit.
OracleResult ExactSpectrum(const Graph& g, std::optional<int> t_max = {},
                           const OracleLimits& limits = {},
                           std::string graph_id = "");

// A report filled from exhaustive search; w/W fields only where the
// corresponding spectrum is nonempty. χ' is the smallest t with a proper
// coloring. M is included for trees.
SpectrumReport SpectrumFromOracle(const Graph& g, const OracleResult& result);

// Color set of the union of the stars of the internal path vertices.
ColorSet InternalStarColors(const Graph& g, const Coloring& c,
                            const PathData& path);

// The properties below hold for every cyclically-interval coloring; each
// check throws kPrecondition if `c` is not one (or the path is too short).

// For a path with at least two edges, the internal star colors form a
// t-cyclic interval.
bool HoldsInternalStarsCyclic(const Graph& g, const Coloring& c,
                              const PathData& path);

// For a path e_1 ... e_k (k >= 2), one of the two open cyclic segments
// between the colors of e_1 and e_k lies inside the internal star colors.
bool HoldsSegmentCovered(const Graph& g, const Coloring& c,
                         const PathData& path);

// On a tree, some vertex pair's path star carries every color of [1, t].
bool HoldsPalettePathStar(const Graph& tree, const Coloring& c);

// On a tree, some vertex pair's path star has at least t edges.
bool HoldsPathStarBound(const Graph& tree, const Coloring& c);

// Tree built from a Prüfer sequence over n = seq.size() + 2 vertices. Edge
// ids follow the decoding order. Throws kOutOfRange on a bad entry.
Graph TreeFromPrufer(std::span<const int> sequence);

// Canonical string of an unrooted tree, equal for isomorphic trees.
std::string CanonicalTreeForm(const Graph& tree);

// One representative of every isomorphism class of trees with 1..max_edges
// edges, generated from all Prüfer sequences and deduplicated by canonical
// form. Ordered by edge count, then canonical form. Throws kSizeLimit when
// max_edges exceeds the oracle limit.
std::vector<Graph> TreeCatalog(int max_edges, const OracleLimits& limits = {});

}  // namespace icol

#endif  // ICOL_ORACLE_H_
