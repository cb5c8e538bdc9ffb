#ifndef SZC_SZEGED_HPP
#define SZC_SZEGED_HPP

#include <cstdint>
#include <vector>

#include "szc/graph.hpp"

namespace szc {

/// Distance partition induced by one edge e = (u, v): how many vertices and
/// edges lie strictly closer to u, strictly closer to v, or equidistant.
/// n_u + n_v + n_0 == n and m_u + m_v + m_0 == m always hold; m_0 >= 1
/// because e itself is equidistant to its own endpoints.
struct EdgePartition {
  Edge e;
  std::int64_t n_u = 0, n_v = 0, n_0 = 0;
  std::int64_t m_u = 0, m_v = 0, m_0 = 0;

  std::int64_t product_contribution() const { return m_u * m_v; }
  std::int64_t mixed_contribution() const { return n_u * m_v + n_v * m_u; }
};

/// The four distance indices of a connected graph.  The edge-vertex variant
/// is half-integral on some graphs, so it is carried as the doubled integer;
/// nothing in this module touches floating point.
struct IndexReport {
  std::int64_t wiener = 0;
  std::int64_t szeged = 0;
  std::int64_t edge_szeged = 0;
  std::int64_t edge_vertex_szeged_x2 = 0;
  std::vector<EdgePartition> per_edge;  // lexicographic edge order
};

/// min over the endpoints of e of the hop distance to w.
int edge_distance(const Graph& g, Edge e, int w);

/// Partition counts for one edge, from BFS at each endpoint.
EdgePartition edge_partition(const Graph& g, Edge e);

IndexReport compute_indices(const Graph& g);

}  // namespace szc

#endif
