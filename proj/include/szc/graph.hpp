#ifndef SZC_GRAPH_HPP
#define SZC_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "szc/error.hpp"

namespace szc {

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.  Vertices are 0..n-1, the edge list is
/// kept sorted lexicographically and per-vertex neighbor lists are sorted.
/// All algorithms in this library take Graph by const reference and build new
/// graphs instead of mutating, so values are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes the input.  Edges may be given in either
  /// orientation; self-loops, duplicates and out-of-range endpoints are
  /// rejected.
  static Graph build(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Sentinel distance for vertices not reachable from the BFS source.
inline constexpr int kUnreached = -1;

/// Hop distances from source s; unreachable vertices get kUnreached.
std::vector<int> bfs_distances(const Graph& g, int s);

/// All bridges of g, in lexicographic order.
std::vector<Edge> cut_edges(const Graph& g);

struct Block {
  enum class Kind { CutEdge, Cycle };

  Kind kind;
  /// CutEdge: the two endpoints, u < v.  Cycle: the vertices in cyclic order,
  /// rotated so the smallest vertex comes first and its smaller neighbor
  /// second.
  std::vector<int> vertices;
  /// Cycles only: true when at most one vertex of the cycle has degree != 2
  /// in the whole graph.
  bool end_block = false;
};

/// Block decomposition of a connected cactus: every block is a cut edge or a
/// cycle, and cycle_count == m - n + 1.
struct CactusDecomposition {
  std::vector<Block> blocks;
  int cycle_count = 0;
};

/// Biconnected decomposition, accepted only when every block is a single edge
/// or an induced cycle.  Throws NotCactus otherwise, Disconnected when g is
/// not connected.
CactusDecomposition decompose_blocks(const Graph& g);

bool is_cactus(const Graph& g);

/// New graph obtained by applying vertex permutation perm (perm[old] = new).
Graph relabel(const Graph& g, std::span<const int> perm);

/// Glue two graphs by identifying vertex a of ga with vertex b of gb.
/// Vertices of ga keep their labels; the remaining vertices of gb follow in
/// increasing original order.
Graph glue_at(const Graph& ga, int a, const Graph& gb, int b);

}  // namespace szc

#endif
