#include "szc/cycle_analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "szc/szeged.hpp"

namespace szc {

namespace {

void require_cycle_length(int length) {
  if (length < 3)
    fail(ErrorCode::CycleTooShort,
         "cycle length " + std::to_string(length) + " below 3");
}

}  // namespace

CycleContext cycle_components(const Graph& g, const std::vector<int>& cycle) {
  const int l = static_cast<int>(cycle.size());
  require_cycle_length(l);

  std::vector<int> position(g.order(), -1);
  for (int i = 0; i < l; ++i) {
    int v = cycle[i];
    if (v < 0 || v >= g.order())
      fail(ErrorCode::VertexOutOfRange, "cycle vertex " + std::to_string(v));
    if (position[v] >= 0)
      fail(ErrorCode::NotACycleBlock,
           "vertex " + std::to_string(v) + " repeats on the cycle");
    position[v] = i;
  }
  for (int i = 0; i < l; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % l]))
      fail(ErrorCode::NotACycleBlock,
           "consecutive cycle vertices " + std::to_string(cycle[i]) + " and " +
               std::to_string(cycle[(i + 1) % l]) + " are not adjacent");
  }

  if (!g.is_connected()) fail(ErrorCode::Disconnected, "graph is not connected");

  auto on_cycle_edge = [&](int a, int b) {
    int pa = position[a], pb = position[b];
    if (pa < 0 || pb < 0) return false;
    int gap = std::abs(pa - pb);
    return gap == 1 || gap == l - 1;
  };

  // Flood fill g minus the cycle edges, starting from each cycle vertex in
  // turn. Touching a previously settled region, or another cycle vertex,
  // means two cycle vertices share a component.
  std::vector<int> component(g.order(), -1);
  for (int id = 0; id < l; ++id) {
    int start = cycle[id];
    component[start] = id;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (on_cycle_edge(v, w)) continue;
        if (component[w] == id) continue;
        if (component[w] >= 0 || position[w] >= 0)
          fail(ErrorCode::NotABlock,
               "cycle vertices " + std::to_string(start) + " and " +
                   std::to_string(component[w] >= 0 ? cycle[component[w]] : w) +
                   " share a component off the cycle");
        component[w] = id;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (component[v] < 0)
      fail(ErrorCode::Internal, "vertex unreached from every cycle vertex");

  CycleContext ctx;
  ctx.cycle = cycle;
  ctx.length = l;
  ctx.half = l / 2;
  ctx.odd = l % 2 == 1;
  ctx.comp_vertices.assign(l, 0);
  ctx.comp_edges.assign(l, 0);
  for (int v = 0; v < g.order(); ++v) ++ctx.comp_vertices[component[v]];
  for (const Edge& e : g.edges()) {
    if (on_cycle_edge(e.u, e.v)) continue;
    if (component[e.u] != component[e.v])
      fail(ErrorCode::Internal, "off-cycle edge spans two components");
    ++ctx.comp_edges[component[e.u]];
  }
  ctx.attached_edges =
      std::accumulate(ctx.comp_edges.begin(), ctx.comp_edges.end(),
                      std::int64_t{0});
  if (ctx.attached_edges != g.size() - l)
    fail(ErrorCode::Internal, "component edge counts do not cover the graph");

  const int k = ctx.half;
  ctx.window_vertices.assign(l, 0);
  ctx.window_edges.assign(l, 0);
  for (int t = 0; t < k; ++t) {
    ctx.window_vertices[0] += ctx.comp_vertices[(l - t) % l];
    ctx.window_edges[0] += ctx.comp_edges[(l - t) % l];
  }
  for (int i = 1; i < l; ++i) {
    int leaving = (i - k + l) % l;
    ctx.window_vertices[i] =
        ctx.window_vertices[i - 1] + ctx.comp_vertices[i] -
        ctx.comp_vertices[leaving];
    ctx.window_edges[i] = ctx.window_edges[i - 1] + ctx.comp_edges[i] -
                          ctx.comp_edges[leaving];
  }
  return ctx;
}

std::int64_t cycle_product_floor(std::int64_t m, int length) {
  require_cycle_length(length);
  if (m < 0) fail(ErrorCode::InvalidArgument, "negative attached edge count");
  std::int64_t k = length / 2;
  if (length % 2 == 0) return 2 * k * (k - 1) * (m + k - 1);
  return k * k * (2 * m + 2 * k + 1);
}

std::int64_t cycle_mixed_floor(std::int64_t n, std::int64_t m, int length) {
  require_cycle_length(length);
  if (n < length || m < 0)
    fail(ErrorCode::InvalidArgument, "counts below the cycle's own");
  std::int64_t k = length / 2;
  if (length % 2 == 0) return 2 * k * k * (n + m) - 2 * k * n;
  return 2 * k * k * (n + m);
}

CycleEdgeSums cycle_edge_sums(const Graph& g, const CycleContext& ctx) {
  const int l = ctx.length;
  const std::int64_t k = ctx.half;
  const std::int64_t n = g.order();
  const std::int64_t m = ctx.attached_edges;

  CycleEdgeSums out;
  out.product_floor = cycle_product_floor(m, l);
  out.mixed_floor = cycle_mixed_floor(n, m, l);

  std::int64_t product_slack = 0;
  std::int64_t mixed_slack = 0;
  for (int i = 0; i < l; ++i) {
    Edge e{ctx.cycle[i], ctx.cycle[(i + 1) % l]};
    EdgePartition part = edge_partition(g, e);
    out.product_sum += part.product_contribution();
    out.mixed_sum += part.mixed_contribution();

    std::int64_t y = ctx.window_edges[i];
    std::int64_t x = ctx.window_vertices[i];
    std::int64_t product, mixed;
    if (!ctx.odd) {
      product = (y + k - 1) * (m - y + k - 1);
      mixed = x * (m - y + k - 1) + (n - x) * (y + k - 1);
      product_slack += y * (m - y);
      mixed_slack += (x - k) * (m - y) + y * (n - x - k);
    } else {
      int opposite = (i - static_cast<int>(k) + l) % l;
      std::int64_t mo = ctx.comp_edges[opposite];
      std::int64_t no = ctx.comp_vertices[opposite];
      product = (y + k) * (m - mo - y + k);
      mixed = x * (m - mo - y + k) + (n - no - x) * (y + k);
      product_slack += y * (m - mo - y);
      mixed_slack += (x - k) * (m - mo - y) + y * (n - no - x - k);
    }
    if (product != part.product_contribution() ||
        mixed != part.mixed_contribution())
      fail(ErrorCode::IdentityMismatch,
           "window forms disagree with partitions at cycle edge " +
               std::to_string(e.u) + "-" + std::to_string(e.v));
  }

  if (out.product_sum != out.product_floor + product_slack ||
      out.mixed_sum != out.mixed_floor + mixed_slack)
    fail(ErrorCode::IdentityMismatch,
         "cycle-edge sums disagree with their floor expansions");

  out.tight = out.product_sum == out.product_floor &&
              out.mixed_sum == out.mixed_floor;
  return out;
}

bool cycle_sums_tight(const CycleContext& ctx) {
  int loaded = 0;
  for (std::int64_t m_i : ctx.comp_edges)
    if (m_i > 0) ++loaded;
  return loaded <= 1;
}

namespace {

ShiftCheck failure(Edge e, std::string detail) {
  ShiftCheck out;
  out.pass = false;
  out.edge = e;
  out.detail = std::move(detail);
  return out;
}

}  // namespace

ShiftCheck attachment_shift_check(const Graph& base, int base_at,
                                  const Graph& side, int side_at) {
  Graph glued = glue_at(base, base_at, side, side_at);
  std::vector<int> to_joint = bfs_distances(base, base_at);
  const std::int64_t extra_vertices = side.order() - 1;
  const std::int64_t extra_edges = side.size();

  for (const Edge& e : base.edges()) {
    EdgePartition before = edge_partition(base, e);
    EdgePartition after = edge_partition(glued, e);
    int du = to_joint[e.u];
    int dv = to_joint[e.v];
    std::int64_t joint_u = du < dv ? 1 : 0;
    std::int64_t joint_v = dv < du ? 1 : 0;
    std::int64_t joint_mid = 1 - joint_u - joint_v;
    bool ok = after.n_u == before.n_u + joint_u * extra_vertices &&
              after.n_v == before.n_v + joint_v * extra_vertices &&
              after.n_0 == before.n_0 + joint_mid * extra_vertices &&
              after.m_u == before.m_u + joint_u * extra_edges &&
              after.m_v == before.m_v + joint_v * extra_edges &&
              after.m_0 == before.m_0 + joint_mid * extra_edges;
    if (!ok)
      return failure(e, "partition of edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) +
                            " did not shift by the joint rule");
  }
  return ShiftCheck{};
}

ShiftCheck swap_invariance_check(const Graph& base, int base_at,
                                 const Graph& first, int first_at,
                                 const Graph& second, int second_at) {
  if (first.order() != second.order() || first.size() != second.size())
    fail(ErrorCode::InvalidArgument,
         "swapped attachments must agree in order and size");
  Graph with_first = glue_at(base, base_at, first, first_at);
  Graph with_second = glue_at(base, base_at, second, second_at);
  for (const Edge& e : base.edges()) {
    EdgePartition a = edge_partition(with_first, e);
    EdgePartition b = edge_partition(with_second, e);
    bool ok = a.n_u == b.n_u && a.n_v == b.n_v && a.n_0 == b.n_0 &&
              a.m_u == b.m_u && a.m_v == b.m_v && a.m_0 == b.m_0;
    if (!ok)
      return failure(e, "partition of edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) +
                            " changed under an equal-size swap");
  }
  return ShiftCheck{};
}

}  // namespace szc
