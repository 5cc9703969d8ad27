#include "icol/graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

#include "icol/error.h"

namespace icol {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kLoop: return "loop";
    case ErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kEmptyGraph: return "empty-graph";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kNotTree: return "not-tree";
    case ErrorKind::kEdgeless: return "edgeless";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kSizeLimit: return "size-limit";
  }
  return "unknown";
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) {
    throw Error(ErrorKind::kEmptyGraph, "graph must have at least one vertex");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw Error(ErrorKind::kOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") references a vertex outside [0," +
                      std::to_string(num_vertices_ - 1) + "]");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kLoop,
                  "loop at vertex " + std::to_string(e.u));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    }
  }

  offsets_.assign(num_vertices_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int x = 0; x < num_vertices_; ++x) offsets_[x + 1] += offsets_[x];
  incidence_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    incidence_[fill[edges_[id].u]++] = id;
    incidence_[fill[edges_[id].v]++] = id;
  }

  if (std::ranges::any_of(DistancesFrom(*this, 0),
                          [](int d) { return d < 0; })) {
    throw Error(ErrorKind::kDisconnected, "graph is not connected");
  }
}

void Graph::CheckVertex(Vertex x) const {
  if (x < 0 || x >= num_vertices_) {
    throw Error(ErrorKind::kOutOfRange,
                "vertex " + std::to_string(x) + " outside [0," +
                    std::to_string(num_vertices_ - 1) + "]");
  }
}

const Edge& Graph::edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) {
    throw Error(ErrorKind::kOutOfRange, "unknown edge id " + std::to_string(e));
  }
  return edges_[e];
}

std::span<const EdgeId> Graph::IncidentEdges(Vertex x) const {
  CheckVertex(x);
  return std::span<const EdgeId>(incidence_).subspan(
      offsets_[x], offsets_[x + 1] - offsets_[x]);
}

std::vector<Vertex> Graph::Neighbors(Vertex x) const {
  std::vector<Vertex> out;
  for (EdgeId e : IncidentEdges(x)) out.push_back(edges_[e].Other(x));
  return out;
}

int Graph::Degree(Vertex x) const {
  return static_cast<int>(IncidentEdges(x).size());
}

std::optional<EdgeId> Graph::EdgeBetween(Vertex x, Vertex y) const {
  CheckVertex(y);
  for (EdgeId e : IncidentEdges(x)) {
    if (edges_[e].Other(x) == y) return e;
  }
  return std::nullopt;
}

bool IsTree(const Graph& g) { return g.num_edges() == g.num_vertices() - 1; }

std::vector<int> DistancesFrom(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.IncidentEdges(x)) {
      Vertex y = g.edge(e).Other(x);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int Distance(const Graph& g, Vertex x, Vertex y) {
  g.IncidentEdges(y);  // range check
  return DistancesFrom(g, x)[y];
}

int DistanceToSet(const Graph& g, Vertex x, std::span<const Vertex> targets) {
  if (targets.empty()) {
    throw Error(ErrorKind::kPrecondition, "distance to an empty vertex set");
  }
  std::vector<int> dist = DistancesFrom(g, x);
  int best = g.num_vertices();
  for (Vertex z : targets) {
    g.IncidentEdges(z);
    best = std::min(best, dist[z]);
  }
  return best;
}

namespace {

template <typename T>
void SortUnique(std::vector<T>& v) {
  std::ranges::sort(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PathData MakePath(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) {
    throw Error(ErrorKind::kPrecondition, "a path needs at least one vertex");
  }
  PathData path;
  path.source = vertices.front();
  path.target = vertices.back();
  path.vertices.assign(vertices.begin(), vertices.end());

  std::vector<Vertex> distinct = path.vertices;
  SortUnique(distinct);
  if (distinct.size() != path.vertices.size()) {
    throw Error(ErrorKind::kPrecondition, "path repeats a vertex");
  }
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    std::optional<EdgeId> e = g.EdgeBetween(vertices[i], vertices[i + 1]);
    if (!e) {
      throw Error(ErrorKind::kPrecondition,
                  "vertices " + std::to_string(vertices[i]) + " and " +
                      std::to_string(vertices[i + 1]) + " are not adjacent");
    }
    path.edges.push_back(*e);
  }
  if (vertices.size() == 1) g.IncidentEdges(vertices.front());

  if (vertices.size() > 2) {
    path.internal_vertices.assign(vertices.begin() + 1, vertices.end() - 1);
  }
  path.extended_vertices = path.vertices;
  for (Vertex x : path.internal_vertices) {
    for (EdgeId e : g.IncidentEdges(x)) {
      path.extended_vertices.push_back(g.edge(e).Other(x));
      path.star_edges.push_back(e);
    }
  }
  if (path.internal_vertices.empty()) path.star_edges = path.edges;
  SortUnique(path.internal_vertices);
  SortUnique(path.extended_vertices);
  SortUnique(path.star_edges);
  return path;
}

PathData TreePath(const Graph& tree, Vertex a, Vertex b) {
  if (!IsTree(tree)) {
    throw Error(ErrorKind::kNotTree, "tree path requested on a non-tree");
  }
  tree.IncidentEdges(a);
  tree.IncidentEdges(b);
  // Walk parent pointers of a BFS rooted at b, so the path comes out a..b.
  std::vector<Vertex> parent(tree.num_vertices(), -1);
  std::vector<bool> seen(tree.num_vertices(), false);
  std::deque<Vertex> queue{b};
  seen[b] = true;
  while (!queue.empty() && !seen[a]) {
    Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : tree.IncidentEdges(x)) {
      Vertex y = tree.edge(e).Other(x);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> walk{a};
  for (Vertex x = a; x != b; x = parent[x]) walk.push_back(parent[x]);
  return MakePath(tree, walk);
}

namespace {

void ExtendPaths(const Graph& g, int min_edges, std::vector<Vertex>& current,
                 std::vector<bool>& on_path,
                 std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(current.size()) - 1 >= min_edges) out.push_back(current);
  Vertex last = current.back();
  for (EdgeId e : g.IncidentEdges(last)) {
    Vertex next = g.edge(e).Other(last);
    if (on_path[next]) continue;
    on_path[next] = true;
    current.push_back(next);
    ExtendPaths(g, min_edges, current, on_path, out);
    current.pop_back();
    on_path[next] = false;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> AllSimplePaths(const Graph& g, int min_edges) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> on_path(g.num_vertices(), false);
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    std::vector<Vertex> current{start};
    on_path[start] = true;
    ExtendPaths(g, min_edges, current, on_path, out);
    on_path[start] = false;
  }
  return out;
}

}  // namespace icol
