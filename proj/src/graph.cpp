#include "szc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace szc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotCactus: return "NotCactus";
    case ErrorCode::NotABlock: return "NotABlock";
    case ErrorCode::NotACycleBlock: return "NotACycleBlock";
    case ErrorCode::NotCutEdge: return "NotCutEdge";
    case ErrorCode::EndpointIsPendant: return "EndpointIsPendant";
    case ErrorCode::CycleTooShort: return "CycleTooShort";
    case ErrorCode::NotEndBlock: return "NotEndBlock";
    case ErrorCode::GraphTooSmall: return "GraphTooSmall";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBitstream: return "TruncatedBitstream";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "vertex count must be nonnegative");
  Graph g;
  g.order_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorCode::VertexOutOfRange,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") out of range for n=" + std::to_string(n));
    if (u == v)
      fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    fail(ErrorCode::DuplicateEdge,
         "duplicate edge (" + std::to_string(dup->u) + "," +
             std::to_string(dup->v) + ")");
  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= order_)
    fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  return adjacency_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
  if (order_ == 0) return true;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreached; });
}

std::vector<int> bfs_distances(const Graph& g, int s) {
  if (s < 0 || s >= g.order())
    fail(ErrorCode::VertexOutOfRange, "BFS source " + std::to_string(s));
  std::vector<int> dist(g.order(), kUnreached);
  std::deque<int> queue;
  dist[s] = 0;
  queue.push_back(s);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

// Shared state for the iterative lowpoint DFS used by both cut_edges and
// decompose_blocks.
struct LowlinkDfs {
  const Graph& g;
  std::vector<int> entry_time;
  std::vector<int> low;
  std::vector<int> parent;
  int clock = 0;

  explicit LowlinkDfs(const Graph& g)
      : g(g), entry_time(g.order(), -1), low(g.order(), 0),
        parent(g.order(), -1) {}

  // Visits the component of root; on_tree_edge(v, w) fires when tree edge
  // v->w is pushed, on_retreat(v, w) when the DFS returns from w to v.
  template <typename OnTreeEdge, typename OnBackEdge, typename OnRetreat>
  void run(int root, OnTreeEdge on_tree_edge, OnBackEdge on_back_edge,
           OnRetreat on_retreat) {
    struct Frame {
      int v;
      size_t next = 0;
    };
    std::vector<Frame> stack;
    entry_time[root] = low[root] = clock++;
    stack.push_back({root});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (entry_time[w] == -1) {
          parent[w] = f.v;
          entry_time[w] = low[w] = clock++;
          on_tree_edge(f.v, w);
          stack.push_back({w});
        } else if (w != parent[f.v] && entry_time[w] < entry_time[f.v]) {
          // Back edge, seen once thanks to the entry-time comparison.
          low[f.v] = std::min(low[f.v], entry_time[w]);
          on_back_edge(f.v, w);
        }
      } else {
        int w = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int v = stack.back().v;
          low[v] = std::min(low[v], low[w]);
          on_retreat(v, w);
        }
      }
    }
  }
};

}  // namespace

std::vector<Edge> cut_edges(const Graph& g) {
  std::vector<Edge> bridges;
  LowlinkDfs dfs(g);
  for (int root = 0; root < g.order(); ++root) {
    if (dfs.entry_time[root] != -1) continue;
    dfs.run(
        root, [](int, int) {}, [](int, int) {},
        [&](int v, int w) {
          if (dfs.low[w] > dfs.entry_time[v])
            bridges.push_back({std::min(v, w), std::max(v, w)});
        });
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

namespace {

// Rotates/reverses a cyclic vertex sequence into canonical form: smallest
// vertex first, followed by its smaller neighbor.
std::vector<int> canonical_cycle_order(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

// Orders the block's edges into a single cycle, or returns empty if the block
// is not a plain cycle.
std::vector<int> trace_cycle(const std::vector<Edge>& block_edges) {
  std::set<int> verts;
  for (const Edge& e : block_edges) {
    verts.insert(e.u);
    verts.insert(e.v);
  }
  if (verts.size() != block_edges.size()) return {};
  std::vector<std::vector<int>> local(block_edges.size() * 2);
  std::vector<int> ids(verts.begin(), verts.end());
  auto id_of = [&](int v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) -
                            ids.begin());
  };
  std::vector<std::vector<int>> adj(ids.size());
  for (const Edge& e : block_edges) {
    adj[id_of(e.u)].push_back(e.v);
    adj[id_of(e.v)].push_back(e.u);
  }
  for (const auto& nbrs : adj)
    if (nbrs.size() != 2) return {};
  std::vector<int> cycle;
  cycle.reserve(ids.size());
  int start = ids[0];
  int prev = -1;
  int cur = start;
  do {
    cycle.push_back(cur);
    const auto& nbrs = adj[id_of(cur)];
    int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  } while (cur != start && cycle.size() <= ids.size());
  if (cycle.size() != ids.size()) return {};
  return canonical_cycle_order(std::move(cycle));
}

}  // namespace

CactusDecomposition decompose_blocks(const Graph& g) {
  if (g.order() == 0)
    fail(ErrorCode::InvalidArgument, "empty graph has no block structure");
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph is disconnected");

  CactusDecomposition result;
  std::vector<Edge> edge_stack;
  LowlinkDfs dfs(g);

  auto pop_block = [&](int v, int w) {
    // Pop all edges of the biconnected component rooted at tree edge (v, w).
    std::vector<Edge> block_edges;
    Edge top{std::min(v, w), std::max(v, w)};
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block_edges.push_back(e);
      if (e == top) break;
    }
    if (block_edges.size() == 1) {
      result.blocks.push_back(
          {Block::Kind::CutEdge, {block_edges[0].u, block_edges[0].v}, false});
      return;
    }
    std::vector<int> cycle = trace_cycle(block_edges);
    if (cycle.empty())
      fail(ErrorCode::NotCactus,
           "biconnected block with " + std::to_string(block_edges.size()) +
               " edges is not a cycle");
    int off_degree = 0;
    for (int u : cycle)
      if (g.degree(u) != 2) ++off_degree;
    result.blocks.push_back(
        {Block::Kind::Cycle, std::move(cycle), off_degree <= 1});
    ++result.cycle_count;
  };

  dfs.run(
      0,
      [&](int v, int w) {
        edge_stack.push_back({std::min(v, w), std::max(v, w)});
      },
      [&](int v, int w) {
        edge_stack.push_back({std::min(v, w), std::max(v, w)});
      },
      [&](int v, int w) {
        if (dfs.low[w] >= dfs.entry_time[v]) pop_block(v, w);
      });

  if (!edge_stack.empty())
    fail(ErrorCode::Internal, "block decomposition left edges unassigned");

  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const Block& a, const Block& b) {
              return a.vertices < b.vertices;
            });
  return result;
}

bool is_cactus(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) return false;
  try {
    decompose_blocks(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCactus) return false;
    throw;
  }
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    fail(ErrorCode::InvalidArgument, "permutation size mismatch");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::build(g.order(), std::move(edges));
}

Graph glue_at(const Graph& ga, int a, const Graph& gb, int b) {
  if (a < 0 || a >= ga.order() || b < 0 || b >= gb.order())
    fail(ErrorCode::VertexOutOfRange, "glue vertex out of range");
  std::vector<int> map_b(gb.order());
  int next = ga.order();
  for (int v = 0; v < gb.order(); ++v)
    map_b[v] = (v == b) ? a : next++;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(ga.edges().size() + gb.edges().size());
  for (const Edge& e : ga.edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : gb.edges()) edges.emplace_back(map_b[e.u], map_b[e.v]);
  return Graph::build(ga.order() + gb.order() - 1, std::move(edges));
}

}  // namespace szc
