#include "icol/invariants.h"

#include <algorithm>
#include <deque>

#include "icol/error.h"

namespace icol {

PaletteSizes PaletteRange(int lo, int hi) {
  PaletteSizes out;
  for (int t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

bool IsContiguous(const PaletteSizes& s) {
  return !s.empty() && s.back() - s.front() + 1 == static_cast<int>(s.size());
}

int MaxDegree(const Graph& g) {
  int best = 0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    best = std::max(best, g.Degree(x));
  }
  return best;
}

int ChromaticIndexTree(const Graph& tree) {
  if (!IsTree(tree)) {
    throw Error(ErrorKind::kNotTree, "chromatic index formula needs a tree");
  }
  return MaxDegree(tree);
}

namespace {

void RequireNonTrivialTree(const Graph& g) {
  if (!IsTree(g)) throw Error(ErrorKind::kNotTree, "graph is not a tree");
  if (g.num_edges() == 0) {
    throw Error(ErrorKind::kEdgeless, "tree has no edges");
  }
}

}  // namespace

PathBound MaxPathStarSize(const Graph& tree) {
  RequireNonTrivialTree(tree);
  const int n = tree.num_vertices();
  PathBound best;
  std::vector<int> dist(n);
  // degree_sum[y]: sum of degrees of the path vertices strictly between the
  // source and y.
  std::vector<int> degree_sum(n);
  for (Vertex a = 0; a < n; ++a) {
    std::ranges::fill(dist, -1);
    dist[a] = 0;
    degree_sum[a] = 0;
    std::deque<Vertex> queue{a};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : tree.IncidentEdges(x)) {
        Vertex y = tree.edge(e).Other(x);
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        degree_sum[y] = degree_sum[x] + (x == a ? 0 : tree.Degree(x));
        queue.push_back(y);
      }
    }
    for (Vertex b = a + 1; b < n; ++b) {
      // Internal stars overlap exactly on the dist-2 internal path edges.
      int internal = dist[b] - 1;
      int size = internal == 0 ? 1 : degree_sum[b] - (internal - 1);
      if (size > best.value) best = {size, a, b};
    }
  }
  return best;
}

const char* ProvenanceName(Provenance p) {
  return p == Provenance::kFormula ? "formula" : "oracle";
}

SpectrumReport SpectrumTree(const Graph& tree) {
  RequireNonTrivialTree(tree);
  SpectrumReport report;
  report.num_edges = tree.num_edges();
  report.delta = MaxDegree(tree);
  report.chi_prime = ChromaticIndexTree(tree);
  PathBound bound = MaxPathStarSize(tree);
  report.m_of_h = bound.value;
  report.m_witness = bound;
  report.theta = PaletteRange(report.delta, bound.value);
  report.theta_cyc = report.theta;
  report.w_int = report.w_cyc = report.delta;
  report.W_int = report.W_cyc = bound.value;
  report.provenance = Provenance::kFormula;
  return report;
}

bool SatisfiesInequalityChain(const SpectrumReport& report) {
  std::vector<int> chain{report.delta};
  for (const std::optional<int>& v :
       {report.chi_prime, report.w_cyc, report.w_int, report.W_int,
        report.W_cyc}) {
    if (v) chain.push_back(*v);
  }
  chain.push_back(report.num_edges);
  if (!std::ranges::is_sorted(chain)) return false;
  if (report.theta && report.theta_cyc) {
    return std::ranges::includes(*report.theta_cyc, *report.theta);
  }
  return true;
}

}  // namespace icol
