#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace szc_test {

std::vector<std::vector<int>> floyd_warshall(const szc::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const szc::Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int via = 0; via < n; ++via)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        d[a][b] = std::min(d[a][b], d[a][via] + d[via][b]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

szc::IndexReport indices_by_matrix(const szc::Graph& g) {
  auto d = floyd_warshall(g);
  szc::IndexReport out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (d[a][b] < 0) throw std::runtime_error("oracle: disconnected");
      out.wiener += d[a][b];
    }
  for (const szc::Edge& e : g.edges()) {
    szc::EdgePartition p;
    p.e = e;
    for (int w = 0; w < n; ++w) {
      if (d[w][e.u] < d[w][e.v])
        ++p.n_u;
      else if (d[w][e.v] < d[w][e.u])
        ++p.n_v;
      else
        ++p.n_0;
    }
    for (const szc::Edge& f : g.edges()) {
      int fu = std::min(d[f.u][e.u], d[f.v][e.u]);
      int fv = std::min(d[f.u][e.v], d[f.v][e.v]);
      if (fu < fv)
        ++p.m_u;
      else if (fv < fu)
        ++p.m_v;
      else
        ++p.m_0;
    }
    out.szeged += p.n_u * p.n_v;
    out.edge_szeged += p.m_u * p.m_v;
    out.edge_vertex_szeged_x2 += p.n_u * p.m_v + p.n_v * p.m_u;
    out.per_edge.push_back(p);
  }
  return out;
}

namespace {

int reachable_count_skipping(const szc::Graph& g, szc::Edge skip) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      bool is_skip = (v == skip.u && w == skip.v) || (v == skip.v && w == skip.u);
      if (is_skip || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count;
}

}  // namespace

std::vector<szc::Edge> bridges_by_removal(const szc::Graph& g) {
  int base = reachable_count_skipping(g, {-1, -1});
  std::vector<szc::Edge> out;
  for (const szc::Edge& e : g.edges())
    if (reachable_count_skipping(g, e) < base) out.push_back(e);
  return out;
}

namespace {

std::string six_bit_groups(const std::string& bits) {
  std::string padded = bits;
  while (padded.size() % 6 != 0) padded.push_back('0');
  std::string out;
  for (std::size_t i = 0; i < padded.size(); i += 6) {
    int value = 0;
    for (int j = 0; j < 6; ++j) value = value * 2 + (padded[i + j] - '0');
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

std::string size_prefix(long long n) {
  if (n <= 62) return std::string(1, static_cast<char>(n + 63));
  std::string bits;
  int width = n <= 258047 ? 18 : 36;
  for (int i = width - 1; i >= 0; --i)
    bits.push_back(((n >> i) & 1) ? '1' : '0');
  std::string prefix = n <= 258047 ? "~" : "~~";
  return prefix + six_bit_groups(bits);
}

}  // namespace

std::string encode_graph6_reference(const szc::Graph& g) {
  std::string bits;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u)
      bits.push_back(g.has_edge(u, v) ? '1' : '0');
  return size_prefix(g.order()) + six_bit_groups(bits);
}

szc::Graph decode_graph6_reference(const std::string& text) {
  std::size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= text.size()) throw std::runtime_error("oracle g6: short");
    char c = text[pos++];
    if (c < 63 || c > 126) throw std::runtime_error("oracle g6: bad byte");
    return c - 63;
  };
  long long n;
  if (text.empty()) throw std::runtime_error("oracle g6: empty");
  if (text[0] != '~') {
    n = take();
  } else if (text.size() >= 2 && text[1] != '~') {
    ++pos;
    n = 0;
    for (int i = 0; i < 3; ++i) n = n * 64 + take();
  } else {
    pos += 2;
    n = 0;
    for (int i = 0; i < 6; ++i) n = n * 64 + take();
  }
  std::string bits;
  while (pos < text.size()) {
    long long v = take();
    for (int i = 5; i >= 0; --i) bits.push_back(((v >> i) & 1) ? '1' : '0');
  }
  long long want = n * (n - 1) / 2;
  if (static_cast<long long>(bits.size()) < want)
    throw std::runtime_error("oracle g6: body too short");
  for (std::size_t i = want; i < bits.size(); ++i)
    if (bits[i] != '0') throw std::runtime_error("oracle g6: padding");
  if (static_cast<long long>(bits.size()) - want >= 6)
    throw std::runtime_error("oracle g6: body too long");
  std::vector<std::pair<int, int>> edges;
  std::size_t at = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits[at++] == '1') edges.emplace_back(u, v);
  return szc::Graph::build(static_cast<int>(n), std::move(edges));
}

std::string min_graph6_over_perms(const szc::Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const szc::Edge& e : g.edges())
      edges.emplace_back(perm[e.u], perm[e.v]);
    std::string s =
        encode_graph6_reference(szc::Graph::build(n, std::move(edges)));
    if (first || s < best) {
      best = std::move(s);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

szc::Graph random_cactus(std::mt19937& rng, int order, int cycles) {
  if (order < 1 || cycles < 0 || order < 2 * cycles + 1)
    throw std::runtime_error("oracle: infeasible cactus parameters");
  // Decide the cycle lengths first, then spend whatever order budget is
  // left on pendant vertices, and attach everything in shuffled sequence.
  std::vector<int> lengths(cycles, 3);
  int budget = order - 1 - 2 * cycles;
  int pendants = 0;
  for (int i = 0; i < budget; ++i) {
    if (cycles > 0 && rng() % 2 == 0)
      ++lengths[rng() % cycles];
    else
      ++pendants;
  }
  struct Op {
    int cycle_length;  // 0 means pendant
  };
  std::vector<Op> ops;
  for (int len : lengths) ops.push_back({len});
  for (int i = 0; i < pendants; ++i) ops.push_back({0});
  std::shuffle(ops.begin(), ops.end(), rng);

  int next = 1;
  std::vector<std::pair<int, int>> edges;
  for (const Op& op : ops) {
    int at = static_cast<int>(rng() % next);
    if (op.cycle_length == 0) {
      edges.emplace_back(at, next);
      ++next;
    } else {
      int first_new = next;
      edges.emplace_back(at, first_new);
      for (int j = 1; j < op.cycle_length - 1; ++j)
        edges.emplace_back(first_new + j - 1, first_new + j);
      edges.emplace_back(first_new + op.cycle_length - 2, at);
      next += op.cycle_length - 1;
    }
  }
  if (next != order) throw std::runtime_error("oracle: cactus size drift");
  return szc::Graph::build(order, std::move(edges));
}

szc::Graph random_cactus(std::mt19937& rng, int order) {
  int max_cycles = (order - 1) / 2;
  int cycles = max_cycles > 0 ? static_cast<int>(rng() % (max_cycles + 1)) : 0;
  return random_cactus(rng, order, cycles);
}

szc::Graph random_graph(std::mt19937& rng, int order) {
  std::uniform_real_distribution<double> density(0.1, 0.9);
  double p = density(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < order; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return szc::Graph::build(order, std::move(edges));
}

szc::Graph random_connected_graph(std::mt19937& rng, int order) {
  for (int tries = 0; tries < 1000; ++tries) {
    szc::Graph g = random_graph(rng, order);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("oracle: no connected sample");
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace szc_test
