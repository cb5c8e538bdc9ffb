#ifndef SZC_CYCLE_ANALYSIS_HPP
#define SZC_CYCLE_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "szc/graph.hpp"

namespace szc {

// Quantities attached to one cycle of a graph: the components left when the
// cycle's own edges are removed, and rolling half-cycle window sums over them.
//
// Storage is 0-based; position i describes the component containing cycle[i].
// The window ending at position i covers the half cycle behind it:
//   window_edges[i] = comp_edges[i] + comp_edges[i-1] + ... + comp_edges[i-half+1]
// with positions wrapping modulo length, and likewise for window_vertices.
struct CycleContext {
  std::vector<int> cycle;  // vertices in cyclic order
  int length = 0;
  int half = 0;  // length == 2*half (even) or 2*half + 1 (odd)
  bool odd = false;
  std::vector<std::int64_t> comp_vertices;
  std::vector<std::int64_t> comp_edges;
  std::vector<std::int64_t> window_vertices;
  std::vector<std::int64_t> window_edges;
  std::int64_t attached_edges = 0;  // total edge count off the cycle
};

// Splits g minus the cycle's edges into components, one per cycle vertex.
// Throws NotACycleBlock if the vertex sequence is not a cycle of g, and
// NotABlock if two cycle vertices end up in a common component or stray
// components remain.
CycleContext cycle_components(const Graph& g, const std::vector<int>& cycle);

// Smallest possible sum of m_u * m_v over the edges of a cycle of the given
// length whose attached components carry m edges in total.
std::int64_t cycle_product_floor(std::int64_t m, int length);

// Smallest possible sum of n_u * m_v + n_v * m_u over the same edges, where n
// counts all vertices of the surrounding graph.
std::int64_t cycle_mixed_floor(std::int64_t n, std::int64_t m, int length);

struct CycleEdgeSums {
  std::int64_t product_sum = 0;  // sum of m_u * m_v over the cycle's edges
  std::int64_t mixed_sum = 0;    // sum of n_u * m_v + n_v * m_u over them
  std::int64_t product_floor = 0;
  std::int64_t mixed_floor = 0;
  bool tight = false;  // both sums sit exactly on their floors
};

// Evaluates the two cycle-edge sums twice, once from shortest-path partitions
// and once from the window closed forms, and insists the results agree.
// Disagreement is an internal error reported as IdentityMismatch.
CycleEdgeSums cycle_edge_sums(const Graph& g, const CycleContext& ctx);

// The floors are attained exactly when at most one component carries edges.
bool cycle_sums_tight(const CycleContext& ctx);

struct ShiftCheck {
  bool pass = true;
  Edge edge{0, 0};     // first base edge violating the prediction
  std::string detail;  // empty when pass
};

// Glues side onto base at the given vertices, then verifies that every
// partition count of a base edge grows by the predicted amount: the side
// graph's extra vertices and edges land with whichever endpoint is closer
// to the joint, and in the tied region when the joint is equidistant.
ShiftCheck attachment_shift_check(const Graph& base, int base_at,
                                  const Graph& side, int side_at);

// Swapping one attached graph for another with equal vertex and edge counts
// must leave every partition count of every base edge unchanged. The two
// side graphs must agree in order and size.
ShiftCheck swap_invariance_check(const Graph& base, int base_at,
                                 const Graph& first, int first_at,
                                 const Graph& second, int second_at);

}  // namespace szc

#endif
