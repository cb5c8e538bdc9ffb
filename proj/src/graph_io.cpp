#include "szc/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace szc {

namespace {

constexpr int kBias = 63;
constexpr std::int64_t kGraph6MaxOrder = (std::int64_t{1} << 36) - 1;
// Memory guard when parsing attacker-supplied headers.
constexpr std::int64_t kParseOrderLimit = 1'000'000;

int g6_value(unsigned char c) {
  if (c < 63 || c > 126)
    fail(ErrorCode::InvalidCharacter,
         "byte " + std::to_string(int(c)) + " outside graph6 range 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) fail(ErrorCode::MalformedHeader, "empty graph6 line");

  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size())
      fail(ErrorCode::TruncatedBitstream, "graph6 line ended early");
    return g6_value(static_cast<unsigned char>(line[pos++]));
  };

  std::int64_t n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int second = next();
    if (second < 63) {
      n = std::int64_t{second} << 12 | next() << 6 | next();
      if (n <= 62)
        fail(ErrorCode::MalformedHeader,
             "non-canonical long size prefix for n=" + std::to_string(n));
    } else {
      n = 0;
      for (int i = 0; i < 6; ++i) n = n << 6 | next();
      if (n <= 258047)
        fail(ErrorCode::MalformedHeader,
             "non-canonical size prefix for n=" + std::to_string(n));
    }
  }
  if (n > kParseOrderLimit)
    fail(ErrorCode::GraphTooLarge,
         "graph6 order " + std::to_string(n) + " exceeds parser limit");

  std::int64_t bits = n * (n - 1) / 2;
  std::int64_t bytes = (bits + 5) / 6;
  if (static_cast<std::int64_t>(line.size() - pos) != bytes)
    fail(ErrorCode::TruncatedBitstream,
         "expected " + std::to_string(bytes) + " body bytes, got " +
             std::to_string(line.size() - pos));

  std::vector<std::pair<int, int>> edges;
  int u = 0, v = 1;
  for (std::int64_t b = 0; b < bytes; ++b) {
    int group = next();
    for (int bit = 5; bit >= 0; --bit) {
      std::int64_t index = b * 6 + (5 - bit);
      if (index >= bits) {
        if (group >> bit & 1)
          fail(ErrorCode::InvalidCharacter, "nonzero graph6 padding bits");
        continue;
      }
      if (group >> bit & 1) edges.emplace_back(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph::build(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  std::int64_t n = g.order();
  if (n > kGraph6MaxOrder)
    fail(ErrorCode::GraphTooLarge, "order exceeds the graph6 limit");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>((n >> 12 & 63) + kBias));
    out.push_back(static_cast<char>((n >> 6 & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>((n >> shift & 63) + kBias));
  }

  std::int64_t bits = n * (n - 1) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  int group = 0;
  int filled = 0;
  int u = 0, v = 1;
  for (std::int64_t i = 0; i < bits; ++i) {
    group = group << 1 | (g.has_edge(u, v) ? 1 : 0);
    if (++u == v) {
      u = 0;
      ++v;
    }
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + kBias));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  struct Line {
    int number;
    int a, b;
  };
  std::vector<Line> rows;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view raw = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    auto tokens = split_ws(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      parse_fail(line_no, "expected two integers");
    int a, b;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b))
      parse_fail(line_no, "expected two integers");
    if (a < 0 || b < 0) parse_fail(line_no, "negative vertex label");
    rows.push_back({line_no, a, b});
  }
  if (rows.empty()) fail(ErrorCode::ParseError, "no edges or header found");

  // The first row is an "n m" header when its second value matches the number
  // of remaining rows and all endpoints fit under n; otherwise it is an edge.
  auto build_from = [&](size_t first_edge, int n) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = first_edge; i < rows.size(); ++i)
      edges.emplace_back(rows[i].a, rows[i].b);
    return Graph::build(n, std::move(edges));
  };
  const Line& head = rows[0];
  if (head.b == static_cast<int>(rows.size()) - 1) {
    bool in_range = true;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].a >= head.a || rows[i].b >= head.a) in_range = false;
    if (in_range) return build_from(1, head.a);
  }
  int n = 0;
  for (const Line& row : rows) n = std::max({n, row.a + 1, row.b + 1});
  return build_from(0, n);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string report_to_json(const Graph& g, const IndexReport& report) {
  nlohmann::ordered_json j;
  j["graph"] = write_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["k"] = g.size() - g.order() + 1;
  j["wiener"] = report.wiener;
  j["szeged"] = report.szeged;
  j["edge_szeged"] = report.edge_szeged;
  j["edge_vertex_szeged_x2"] = report.edge_vertex_szeged_x2;
  auto edges = nlohmann::ordered_json::array();
  for (const EdgePartition& p : report.per_edge) {
    edges.push_back({{"u", p.e.u},
                     {"v", p.e.v},
                     {"n_u", p.n_u},
                     {"n_v", p.n_v},
                     {"n_0", p.n_0},
                     {"m_u", p.m_u},
                     {"m_v", p.m_v},
                     {"m_0", p.m_0}});
  }
  j["per_edge"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Graph& g, const IndexReport& report) {
  std::ostringstream out;
  out << "graph,n,m,k,wiener,szeged,edge_szeged,edge_vertex_szeged_x2\n";
  out << write_graph6(g) << ',' << g.order() << ',' << g.size() << ','
      << g.size() - g.order() + 1 << ',' << report.wiener << ','
      << report.szeged << ',' << report.edge_szeged << ','
      << report.edge_vertex_szeged_x2 << '\n';
  return out.str();
}

}  // namespace szc
