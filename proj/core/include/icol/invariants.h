#ifndef ICOL_INVARIANTS_H_
#define ICOL_INVARIANTS_H_

#include <optional>
#include <vector>

#include "icol/graph.h"

namespace icol {

// A set of palette sizes, sorted ascending without duplicates.
using PaletteSizes = std::vector<int>;

// [lo, hi] as an explicit set.
PaletteSizes PaletteRange(int lo, int hi);
bool IsContiguous(const PaletteSizes& s);

int MaxDegree(const Graph& g);

// For trees the chromatic index equals the maximum degree (König).
// Throws kNotTree.
int ChromaticIndexTree(const Graph& tree);

// Largest |TP(a, b)| over all vertex pairs of a tree, with the
// lexicographically smallest pair attaining it.
struct PathBound {
  int value = 0;
  Vertex first = 0;
  Vertex second = 0;
};

// All-pairs scan. For each source the star-edge count of every path is
// accumulated along a breadth-first traversal, so the whole scan is O(n^2).
// Throws kNotTree or kEdgeless.
PathBound MaxPathStarSize(const Graph& tree);

enum class Provenance { kFormula, kOracle };
const char* ProvenanceName(Provenance p);

// The spectrum parameters of a graph. Fields the source could not determine
// (e.g. w/W values of a graph with an empty spectrum) are absent.
struct SpectrumReport {
  int num_edges = 0;
  int delta = 0;
  std::optional<int> chi_prime;
  std::optional<int> m_of_h;
  std::optional<PathBound> m_witness;
  std::optional<PaletteSizes> theta;      // interval spectrum
  std::optional<PaletteSizes> theta_cyc;  // cyclically-interval spectrum
  std::optional<int> w_int;
  std::optional<int> W_int;
  std::optional<int> w_cyc;
  std::optional<int> W_cyc;
  Provenance provenance = Provenance::kFormula;
};

// Closed-form spectrum of a tree: both spectra are [Δ, M], with the w/W
// endpoints read off that range. Throws kNotTree or kEdgeless.
SpectrumReport SpectrumTree(const Graph& tree);

// Δ ≤ χ' ≤ w_cyc ≤ w_int ≤ W_int ≤ W_cyc ≤ |E| over the fields present, and
// θ ⊆ Θ when both spectra are present.
bool SatisfiesInequalityChain(const SpectrumReport& report);

}  // namespace icol

#endif  // ICOL_INVARIANTS_H_
