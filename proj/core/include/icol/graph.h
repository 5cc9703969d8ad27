#ifndef ICOL_GRAPH_H_
#define ICOL_GRAPH_H_

#include <optional>
#include <span>
#include <vector>

namespace icol {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  // The endpoint of the edge that is not `x`.
  Vertex Other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

// A simple, finite, connected, undirected graph. Vertices are 0..n-1 and an
// edge is identified by its position in the construction-order edge list.
// Immutable after construction.
class Graph {
 public:
  // Validates simplicity and connectivity. Throws icol::Error with kind
  // kEmptyGraph, kOutOfRange, kLoop, kDuplicateEdge or kDisconnected.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }

  // J(x): ids of edges incident with x, ascending.
  std::span<const EdgeId> IncidentEdges(Vertex x) const;
  // I(x): neighbors of x, ordered like IncidentEdges(x).
  std::vector<Vertex> Neighbors(Vertex x) const;
  int Degree(Vertex x) const;

  std::optional<EdgeId> EdgeBetween(Vertex x, Vertex y) const;

  bool operator==(const Graph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  void CheckVertex(Vertex x) const;

  int num_vertices_;
  std::vector<Edge> edges_;
  // CSR incidence lists.
  std::vector<int> offsets_;
  std::vector<EdgeId> incidence_;
};

bool IsTree(const Graph& g);

// Number of edges on a shortest x-y path.
int Distance(const Graph& g, Vertex x, Vertex y);

// min over z in targets of Distance(g, x, z). Throws kPrecondition if
// targets is empty.
int DistanceToSet(const Graph& g, Vertex x, std::span<const Vertex> targets);

// Breadth-first distances from `source` to every vertex.
std::vector<int> DistancesFrom(const Graph& g, Vertex source);

// A simple path together with the derived vertex and edge sets used by the
// spectrum bounds. All sets are stored sorted ascending.
struct PathData {
  Vertex source = 0;
  Vertex target = 0;
  // VP and EP in path order, source first.
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  // VP without the two endpoints.
  std::vector<Vertex> internal_vertices;
  // VP together with every neighbor of an internal vertex.
  std::vector<Vertex> extended_vertices;
  // Union of the stars of internal vertices, or EP when there are none.
  std::vector<EdgeId> star_edges;

  int length() const { return static_cast<int>(edges.size()); }
};

// Builds PathData for an explicit vertex sequence. The sequence must be a
// simple path of g (consecutive vertices adjacent, no repeats); throws
// kPrecondition otherwise.
PathData MakePath(const Graph& g, std::span<const Vertex> vertices);

// The unique simple path of a tree between a and b. a == b yields the
// single-vertex path whose edge sets are all empty. Throws kNotTree or
// kOutOfRange.
PathData TreePath(const Graph& tree, Vertex a, Vertex b);

// Every simple path with at least `min_edges` edges, as vertex sequences.
// Each undirected path is reported once per direction. Exponential; meant
// for small graphs.
std::vector<std::vector<Vertex>> AllSimplePaths(const Graph& g, int min_edges);

}  // namespace icol

#endif  // ICOL_GRAPH_H_
