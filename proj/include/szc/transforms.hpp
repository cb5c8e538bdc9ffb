#ifndef SZC_TRANSFORMS_HPP
#define SZC_TRANSFORMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "szc/graph.hpp"

namespace szc {

enum class TransformRule {
  CutEdgeContraction,
  BranchRelocation,
  CycleShrink,
  C4Collapse,
};

const char* transform_rule_name(TransformRule rule);

// One applied rewrite. The site lists the vertices acted on: both endpoints
// for a contraction, the cycle for the other rules. For a relocation the
// target vertex leads the list; for a shrink or collapse the anchor does.
struct TransformStep {
  TransformRule rule;
  std::vector<int> site;
  std::int64_t sz_e_before = 0;
  std::int64_t sz_ev_x2_before = 0;
  std::int64_t sz_e_after = 0;
  std::int64_t sz_ev_x2_after = 0;

  std::int64_t sz_e_delta() const { return sz_e_before - sz_e_after; }
  std::int64_t sz_ev_x2_delta() const {
    return sz_ev_x2_before - sz_ev_x2_after;
  }
};

std::string trace_to_json(const std::vector<TransformStep>& steps);

// Merges the two sides of a cut edge: every neighbor of the second endpoint
// is rewired to the first, and the second endpoint stays behind as a pendant.
// Requires both endpoints to have other neighbors; vertex count, edge count
// and cycle count are preserved.
Graph contract_cut_edge(const Graph& g, Edge e);

// Reattaches every branch hanging off the cycle at the target vertex, so the
// cycle becomes an end-block. A cycle that already is one comes back
// unchanged.
Graph relocate_branches(const Graph& g, const std::vector<int>& cycle,
                        int target);

// Shortens an end-block cycle of length at least 5 by two: the anchor's two
// cycle neighbors become its pendants and the anchor reconnects to the next
// vertices along. The anchor is the cycle's attachment vertex, or its
// smallest vertex when the whole component is the cycle.
Graph shrink_cycle(const Graph& g, const std::vector<int>& cycle);

// Rewrites an end-block 4-cycle into a triangle plus one pendant at the
// anchor. Requires the graph to extend beyond the cycle itself.
Graph collapse_c4(const Graph& g, const std::vector<int>& cycle);

struct NormalizationResult {
  Graph graph;
  std::vector<TransformStep> steps;
};

// Applies the rewrites until none fits, in a fixed priority with
// deterministic site choice. Both index values fall strictly at each step,
// and the order, size and cycle count never change, so the result is the
// canonical minimiser for its (order, cycle count) pair.
NormalizationResult normalize_to_extremal(const Graph& g);

}  // namespace szc

#endif
