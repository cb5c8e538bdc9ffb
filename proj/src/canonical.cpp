#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "szc/extremal.hpp"
#include "szc/graph_io.hpp"

namespace szc {

namespace {

void require_within(const Graph& g, int limit) {
  if (limit < 1) fail(ErrorCode::InvalidArgument, "nonpositive order limit");
  if (g.order() > limit)
    fail(ErrorCode::TooLarge, "order " + std::to_string(g.order()) +
                                  " above canonical-form limit " +
                                  std::to_string(limit));
}

// Iterated neighborhood refinement.  Colors are replaced by their rank among
// the distinct (color, sorted neighbor colors) signatures until stable, so
// the result depends only on the isomorphism type and the input coloring.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      for (int w : g.neighbors(v)) sig[v].second.push_back(colors[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

bool is_discrete(const std::vector<int>& colors) {
  return *std::max_element(colors.begin(), colors.end()) + 1 ==
         static_cast<int>(colors.size());
}

// Adjacency of the relabeled graph packed so that lexicographic comparison
// of the words matches bit-by-bit comparison in upper-triangle order.
using AdjacencyKey = std::vector<std::uint64_t>;

AdjacencyKey relabeled_key(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  AdjacencyKey key((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  for (const Edge& e : g.edges()) {
    int a = colors[e.u], b = colors[e.v];
    if (a > b) std::swap(a, b);
    std::size_t index = static_cast<std::size_t>(b) * (b - 1) / 2 + a;
    key[index / 64] |= std::uint64_t{1} << (63 - index % 64);
  }
  return key;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Backtracking search for the coloring whose relabeled adjacency key is
// largest.  Automorphisms discovered from equal leaves prune branches that
// a known symmetry maps onto an already explored one.
struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> generators;
  std::vector<int> best;
  AdjacencyKey best_key;
  bool have_best = false;
  std::vector<int> path;

  explicit CanonicalSearch(const Graph& graph)
      : g(graph), n(graph.order()) {}

  void run() {
    std::vector<int> colors = refine(g, std::vector<int>(n, 0));
    descend(std::move(colors));
  }

  void descend(std::vector<int> colors) {
    if (is_discrete(colors)) {
      leaf(colors);
      return;
    }
    int cell_color = 0;
    {
      std::vector<int> count(n, 0);
      for (int c : colors) ++count[c];
      while (count[cell_color] < 2) ++cell_color;
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (colors[v] == cell_color) members.push_back(v);

    std::vector<int> tried;
    for (int v : members) {
      if (symmetric_to_tried(v, tried)) continue;
      tried.push_back(v);
      std::vector<int> split(n);
      for (int u = 0; u < n; ++u) split[u] = 2 * colors[u] + 1;
      split[v] = 2 * colors[v];
      path.push_back(v);
      descend(refine(g, std::move(split)));
      path.pop_back();
    }
  }

  bool symmetric_to_tried(int v, const std::vector<int>& tried) {
    if (tried.empty()) return false;
    UnionFind uf(n);
    for (const std::vector<int>& gen : generators) {
      bool fixes_path = true;
      for (int p : path)
        if (gen[p] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int x = 0; x < n; ++x) uf.unite(x, gen[x]);
    }
    for (int t : tried)
      if (uf.find(t) == uf.find(v)) return true;
    return false;
  }

  void leaf(const std::vector<int>& colors) {
    AdjacencyKey key = relabeled_key(g, colors);
    if (!have_best || key > best_key) {
      best = colors;
      best_key = std::move(key);
      have_best = true;
      return;
    }
    if (key != best_key) return;
    std::vector<int> inverse_best(n);
    for (int v = 0; v < n; ++v) inverse_best[best[v]] = v;
    std::vector<int> gen(n);
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      gen[v] = inverse_best[colors[v]];
      if (gen[v] != v) identity = false;
    }
    if (!identity) generators.push_back(std::move(gen));
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int limit) {
  require_within(g, limit);
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.run();
  return search.best;
}

std::string canonical_form(const Graph& g, int limit) {
  std::vector<int> labeling = canonical_labeling(g, limit);
  return write_graph6(relabel(g, labeling));
}

bool is_isomorphic(const Graph& a, const Graph& b, int limit) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, limit) == canonical_form(b, limit);
}

std::int64_t automorphism_count(const Graph& g, int limit) {
  require_within(g, limit);
  const int n = g.order();
  if (n == 0) return 1;

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::int64_t total = 0;

  auto count = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++total;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool consistent = true;
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v) != g.has_edge(image[u], w)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
    }
  };
  count(count, 0);
  return total;
}

}  // namespace szc
