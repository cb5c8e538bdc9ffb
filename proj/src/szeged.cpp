#include "szc/szeged.hpp"

#include <string>

namespace szc {

namespace {

void require_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v))
    fail(ErrorCode::EdgeNotPresent,
         "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
             ") not in graph");
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph is disconnected");
}

EdgePartition partition_from_distances(const Graph& g, Edge e,
                                       const std::vector<int>& du,
                                       const std::vector<int>& dv) {
  EdgePartition p;
  p.e = e;
  for (int w = 0; w < g.order(); ++w) {
    if (du[w] < dv[w])
      ++p.n_u;
    else if (dv[w] < du[w])
      ++p.n_v;
    else
      ++p.n_0;
  }
  for (const Edge& f : g.edges()) {
    int fu = std::min(du[f.u], du[f.v]);
    int fv = std::min(dv[f.u], dv[f.v]);
    if (fu < fv)
      ++p.m_u;
    else if (fv < fu)
      ++p.m_v;
    else
      ++p.m_0;
  }
  return p;
}

}  // namespace

int edge_distance(const Graph& g, Edge e, int w) {
  if (e.u > e.v) std::swap(e.u, e.v);
  require_edge(g, e);
  require_connected(g);
  auto dist = bfs_distances(g, w);
  return std::min(dist[e.u], dist[e.v]);
}

EdgePartition edge_partition(const Graph& g, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  require_edge(g, e);
  require_connected(g);
  auto du = bfs_distances(g, e.u);
  auto dv = bfs_distances(g, e.v);
  return partition_from_distances(g, e, du, dv);
}

IndexReport compute_indices(const Graph& g) {
  if (g.order() < 1)
    fail(ErrorCode::InvalidArgument, "index computation needs n >= 1");
  require_connected(g);

  IndexReport report;
  for (int s = 0; s < g.order(); ++s) {
    auto dist = bfs_distances(g, s);
    for (int t = s + 1; t < g.order(); ++t) report.wiener += dist[t];
  }
  report.per_edge.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    auto du = bfs_distances(g, e.u);
    auto dv = bfs_distances(g, e.v);
    EdgePartition p = partition_from_distances(g, e, du, dv);
    report.szeged += p.n_u * p.n_v;
    report.edge_szeged += p.product_contribution();
    report.edge_vertex_szeged_x2 += p.mixed_contribution();
    report.per_edge.push_back(p);
  }
  return report;
}

}  // namespace szc
