#include "szc/transforms.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include <json.hpp>

#include "szc/cycle_analysis.hpp"
#include "szc/szeged.hpp"

namespace szc {

const char* transform_rule_name(TransformRule rule) {
  switch (rule) {
    case TransformRule::CutEdgeContraction: return "cut_edge_contraction";
    case TransformRule::BranchRelocation: return "branch_relocation";
    case TransformRule::CycleShrink: return "cycle_shrink";
    case TransformRule::C4Collapse: return "c4_collapse";
  }
  return "unknown";
}

std::string trace_to_json(const std::vector<TransformStep>& steps) {
  auto arr = nlohmann::ordered_json::array();
  for (const TransformStep& step : steps) {
    nlohmann::ordered_json entry;
    entry["rule"] = transform_rule_name(step.rule);
    entry["site"] = step.site;
    entry["sz_e_before"] = step.sz_e_before;
    entry["sz_e_after"] = step.sz_e_after;
    entry["sz_e_delta"] = step.sz_e_delta();
    entry["sz_ev_x2_before"] = step.sz_ev_x2_before;
    entry["sz_ev_x2_after"] = step.sz_ev_x2_after;
    entry["sz_ev_x2_delta"] = step.sz_ev_x2_delta();
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

Graph contract_cut_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v))
    fail(ErrorCode::EdgeNotPresent, "edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v) + " not in graph");
  Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
  std::vector<Edge> bridges = cut_edges(g);
  if (std::find(bridges.begin(), bridges.end(), key) == bridges.end())
    fail(ErrorCode::NotCutEdge, "edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v) + " lies on a cycle");
  if (g.degree(e.u) < 2 || g.degree(e.v) < 2)
    fail(ErrorCode::EndpointIsPendant,
         "contraction endpoint has no other neighbors");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const Edge& f : g.edges()) {
    if (f == key) continue;
    int a = f.u == e.v ? e.u : f.u;
    int b = f.v == e.v ? e.u : f.v;
    edges.emplace_back(a, b);
  }
  edges.emplace_back(e.u, e.v);
  return Graph::build(g.order(), std::move(edges));
}

Graph relocate_branches(const Graph& g, const std::vector<int>& cycle,
                        int target) {
  cycle_components(g, cycle);  // validates the cycle and its components
  if (std::find(cycle.begin(), cycle.end(), target) == cycle.end())
    fail(ErrorCode::InvalidArgument,
         "relocation target " + std::to_string(target) + " not on the cycle");

  const int l = static_cast<int>(cycle.size());
  std::vector<int> position(g.order(), -1);
  for (int i = 0; i < l; ++i) position[cycle[i]] = i;
  auto on_cycle_edge = [&](int a, int b) {
    int pa = position[a], pb = position[b];
    if (pa < 0 || pb < 0) return false;
    int gap = std::abs(pa - pb);
    return gap == 1 || gap == l - 1;
  };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const Edge& f : g.edges()) {
    int a = f.u, b = f.v;
    if (!on_cycle_edge(a, b)) {
      if (position[a] >= 0 && a != target)
        a = target;
      else if (position[b] >= 0 && b != target)
        b = target;
    }
    edges.emplace_back(a, b);
  }
  return Graph::build(g.order(), std::move(edges));
}

namespace {

// Cycle rotated so the anchor leads: the single vertex carrying attachments,
// or the smallest vertex of a bare cycle.
std::vector<int> anchored_cycle(const CycleContext& ctx) {
  int loaded = 0;
  int anchor = -1;
  for (int i = 0; i < ctx.length; ++i) {
    if (ctx.comp_vertices[i] > 1) {
      ++loaded;
      anchor = i;
    }
  }
  if (loaded > 1)
    fail(ErrorCode::NotEndBlock,
         "cycle carries attachments at " + std::to_string(loaded) +
             " vertices");
  if (anchor < 0) {
    anchor = static_cast<int>(
        std::min_element(ctx.cycle.begin(), ctx.cycle.end()) -
        ctx.cycle.begin());
  }
  std::vector<int> out(ctx.length);
  for (int j = 0; j < ctx.length; ++j)
    out[j] = ctx.cycle[(anchor + j) % ctx.length];
  return out;
}

Graph rebuild_without(const Graph& g, Edge drop1, Edge drop2,
                      std::pair<int, int> add1, std::pair<int, int> add2) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const Edge& f : g.edges())
    if (!(f == drop1 || f == drop2)) edges.emplace_back(f.u, f.v);
  edges.push_back(add1);
  edges.push_back(add2);
  return Graph::build(g.order(), std::move(edges));
}

Edge ordered(int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; }

}  // namespace

Graph shrink_cycle(const Graph& g, const std::vector<int>& cycle) {
  const int r = static_cast<int>(cycle.size());
  if (r <= 4)
    fail(ErrorCode::CycleTooShort,
         "shrinking needs cycle length at least 5, got " + std::to_string(r));
  CycleContext ctx = cycle_components(g, cycle);
  std::vector<int> q = anchored_cycle(ctx);
  return rebuild_without(g, ordered(q[1], q[2]), ordered(q[r - 2], q[r - 1]),
                         {q[0], q[2]}, {q[0], q[r - 2]});
}

Graph collapse_c4(const Graph& g, const std::vector<int>& cycle) {
  if (cycle.size() != 4)
    fail(ErrorCode::InvalidArgument,
         "collapse applies to 4-cycles, got length " +
             std::to_string(cycle.size()));
  if (g.order() <= 4)
    fail(ErrorCode::GraphTooSmall,
         "collapse needs vertices beyond the cycle itself");
  CycleContext ctx = cycle_components(g, cycle);
  std::vector<int> q = anchored_cycle(ctx);
  return rebuild_without(g, ordered(q[1], q[2]), ordered(q[2], q[3]),
                         {q[1], q[3]}, {q[0], q[2]});
}

namespace {

struct PlannedStep {
  TransformRule rule;
  std::vector<int> site;
  Graph (*apply)(const Graph&, const std::vector<int>&);
};

Graph apply_contract(const Graph& g, const std::vector<int>& site) {
  return contract_cut_edge(g, Edge{site[0], site[1]});
}

Graph apply_relocate(const Graph& g, const std::vector<int>& site) {
  return relocate_branches(g, site, site[0]);
}

Graph apply_shrink(const Graph& g, const std::vector<int>& site) {
  return shrink_cycle(g, site);
}

Graph apply_collapse(const Graph& g, const std::vector<int>& site) {
  return collapse_c4(g, site);
}

// Picks the next rewrite: contractions first, then relocations, shrinks and
// collapses, each at its lexicographically smallest applicable site. The
// decomposition lists blocks in sorted vertex order, so the first applicable
// block of each kind is the smallest.
std::optional<PlannedStep> plan_step(const Graph& g,
                                     const CactusDecomposition& dec) {
  std::optional<std::vector<int>> best_contract;
  std::optional<std::vector<int>> best_relocate;
  std::optional<std::vector<int>> best_shrink;
  std::optional<std::vector<int>> best_collapse;

  for (const Block& block : dec.blocks) {
    if (block.kind == Block::Kind::CutEdge) {
      int u = block.vertices[0], v = block.vertices[1];
      if (g.degree(u) < 2 || g.degree(v) < 2) continue;
      if (!best_contract) best_contract = block.vertices;
      continue;
    }
    std::vector<int> loaded;
    for (int v : block.vertices)
      if (g.degree(v) > 2) loaded.push_back(v);
    if (loaded.size() > 1) {
      if (!best_relocate) {
        // Rotate so the smallest loaded vertex leads; that is the target.
        int target = *std::min_element(loaded.begin(), loaded.end());
        int l = static_cast<int>(block.vertices.size());
        int at = static_cast<int>(
            std::find(block.vertices.begin(), block.vertices.end(), target) -
            block.vertices.begin());
        std::vector<int> site(l);
        for (int j = 0; j < l; ++j) site[j] = block.vertices[(at + j) % l];
        best_relocate = std::move(site);
      }
    } else if (block.vertices.size() >= 5) {
      if (!best_shrink) best_shrink = block.vertices;
    } else if (block.vertices.size() == 4) {
      if (!best_collapse) best_collapse = block.vertices;
    }
  }

  if (best_contract)
    return PlannedStep{TransformRule::CutEdgeContraction, *best_contract,
                       &apply_contract};
  if (best_relocate)
    return PlannedStep{TransformRule::BranchRelocation, *best_relocate,
                       &apply_relocate};
  if (best_shrink)
    return PlannedStep{TransformRule::CycleShrink, *best_shrink,
                       &apply_shrink};
  if (best_collapse)
    return PlannedStep{TransformRule::C4Collapse, *best_collapse,
                       &apply_collapse};
  return std::nullopt;
}

}  // namespace

NormalizationResult normalize_to_extremal(const Graph& g) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph is not connected");
  decompose_blocks(g);  // reject non-cacti before the size gate
  if (g.order() < 5)
    fail(ErrorCode::GraphTooSmall,
         "normalization covers graphs on at least 5 vertices");

  NormalizationResult result{g, {}};
  IndexReport report = compute_indices(result.graph);
  while (true) {
    CactusDecomposition dec = decompose_blocks(result.graph);
    std::optional<PlannedStep> plan = plan_step(result.graph, dec);
    if (!plan) break;

    Graph next = plan->apply(result.graph, plan->site);
    IndexReport after = compute_indices(next);
    if (next.order() != result.graph.order() ||
        next.size() != result.graph.size())
      fail(ErrorCode::Internal, "rewrite changed the graph's order or size");
    if (after.edge_szeged >= report.edge_szeged ||
        after.edge_vertex_szeged_x2 >= report.edge_vertex_szeged_x2)
      fail(ErrorCode::Internal, "rewrite failed to decrease both indices");

    TransformStep step;
    step.rule = plan->rule;
    step.site = plan->site;
    step.sz_e_before = report.edge_szeged;
    step.sz_ev_x2_before = report.edge_vertex_szeged_x2;
    step.sz_e_after = after.edge_szeged;
    step.sz_ev_x2_after = after.edge_vertex_szeged_x2;
    result.steps.push_back(std::move(step));

    result.graph = std::move(next);
    report = after;
  }
  return result;
}

}  // namespace szc
