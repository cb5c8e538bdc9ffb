#include "szcact.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "szc/extremal.hpp"
#include "szc/graph.hpp"
#include "szc/graph_io.hpp"
#include "szc/szeged.hpp"
#include "szc/transforms.hpp"

struct szc_graph {
  szc::Graph impl;
};

namespace {

thread_local std::string last_error;

szc_status status_from(szc::ErrorCode code) {
  using szc::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedHeader:
    case ErrorCode::TruncatedBitstream:
    case ErrorCode::InvalidCharacter:
    case ErrorCode::ParseError:
      return SZC_ERR_PARSE;
    case ErrorCode::Disconnected:
      return SZC_ERR_DISCONNECTED;
    case ErrorCode::NotCactus:
      return SZC_ERR_NOT_CACTUS;
    case ErrorCode::InfeasibleParameters:
      return SZC_ERR_INFEASIBLE;
    case ErrorCode::GraphTooLarge:
    case ErrorCode::TooLarge:
      return SZC_ERR_TOO_LARGE;
    case ErrorCode::IdentityMismatch:
    case ErrorCode::Internal:
      return SZC_ERR_INTERNAL;
    default:
      return SZC_ERR_INVALID;
  }
}

template <typename F>
szc_status guarded(F&& fn) {
  try {
    fn();
    return SZC_OK;
  } catch (const szc::Error& e) {
    last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SZC_ERR_INTERNAL;
  }
}

szc_status invalid(const char* message) {
  last_error = message;
  return SZC_ERR_INVALID;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

szc_status emit_string(const std::string& s, char** out) {
  *out = dup_string(s);
  if (*out == nullptr) {
    last_error = "allocation failed";
    return SZC_ERR_INTERNAL;
  }
  return SZC_OK;
}

szc_status emit_graph(szc::Graph g, szc_graph** out) {
  *out = new szc_graph{std::move(g)};
  return SZC_OK;
}

int resolve_threads(int32_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SZCACT_THREADS")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

extern "C" {

const char* szc_status_name(szc_status status) {
  switch (status) {
    case SZC_OK: return "ok";
    case SZC_ERR_INVALID: return "invalid";
    case SZC_ERR_PARSE: return "parse_error";
    case SZC_ERR_DISCONNECTED: return "disconnected";
    case SZC_ERR_NOT_CACTUS: return "not_a_cactus";
    case SZC_ERR_INFEASIBLE: return "infeasible_parameters";
    case SZC_ERR_TOO_LARGE: return "too_large";
    case SZC_ERR_VERIFICATION: return "verification_failed";
    case SZC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* szc_last_error(void) { return last_error.c_str(); }

void szc_graph_free(szc_graph* g) { delete g; }

void szc_string_free(char* s) { std::free(s); }

szc_status szc_graph_build(int32_t order, const int32_t* endpoints,
                           int32_t edge_count, szc_graph** out) {
  if (out == nullptr) return invalid("null output parameter");
  if (edge_count > 0 && endpoints == nullptr)
    return invalid("null endpoint array");
  return guarded([&] {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count > 0 ? edge_count : 0);
    for (int32_t i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    emit_graph(szc::Graph::build(order, std::move(edges)), out);
  });
}

szc_status szc_graph_copy(const szc_graph* g, szc_graph** out) {
  if (g == nullptr || out == nullptr) return invalid("null graph");
  return emit_graph(g->impl, out);
}

int32_t szc_graph_order(const szc_graph* g) {
  return g == nullptr ? -1 : g->impl.order();
}

int32_t szc_graph_size(const szc_graph* g) {
  return g == nullptr ? -1 : g->impl.size();
}

szc_status szc_graph_edges(const szc_graph* g, int32_t* endpoints) {
  if (g == nullptr || endpoints == nullptr) return invalid("null argument");
  int32_t i = 0;
  for (const szc::Edge& e : g->impl.edges()) {
    endpoints[i++] = e.u;
    endpoints[i++] = e.v;
  }
  return SZC_OK;
}

szc_status szc_parse_graph6(const char* line, szc_graph** out) {
  if (line == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { emit_graph(szc::parse_graph6(line), out); });
}

szc_status szc_parse_edge_list(const char* text, szc_graph** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { emit_graph(szc::parse_edge_list(text), out); });
}

szc_status szc_write_graph6(const szc_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { emit_string(szc::write_graph6(g->impl), out); });
}

szc_status szc_write_edge_list(const szc_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { emit_string(szc::write_edge_list(g->impl), out); });
}

szc_status szc_compute_indices(const szc_graph* g, szc_indices* out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    szc::IndexReport report = szc::compute_indices(g->impl);
    out->wiener = report.wiener;
    out->szeged = report.szeged;
    out->edge_szeged = report.edge_szeged;
    out->edge_vertex_szeged_x2 = report.edge_vertex_szeged_x2;
  });
}

szc_status szc_index_report_json(const szc_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    emit_string(szc::report_to_json(g->impl, szc::compute_indices(g->impl)),
                out);
  });
}

szc_status szc_index_report_csv(const szc_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    emit_string(szc::report_to_csv(g->impl, szc::compute_indices(g->impl)),
                out);
  });
}

szc_status szc_is_cactus(const szc_graph* g, int32_t* out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = szc::is_cactus(g->impl) ? 1 : 0; });
}

szc_status szc_bundle_graph(int32_t n, int32_t k, szc_graph** out) {
  if (out == nullptr) return invalid("null output parameter");
  return guarded([&] { emit_graph(szc::build_c0(n, k), out); });
}

szc_status szc_extremal_bounds(int32_t n, int32_t k, int64_t* sz_e_min,
                               int64_t* sz_ev_x2_min, int32_t* proved) {
  if (sz_e_min == nullptr || sz_ev_x2_min == nullptr || proved == nullptr)
    return invalid("null output parameter");
  return guarded([&] {
    szc::BoundPair bounds = szc::extremal_bounds(n, k);
    *sz_e_min = bounds.sz_e_min;
    *sz_ev_x2_min = bounds.sz_ev_x2_min;
    *proved = bounds.proved ? 1 : 0;
  });
}

szc_status szc_canonical_graph6(const szc_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { emit_string(szc::canonical_form(g->impl), out); });
}

szc_status szc_is_isomorphic(const szc_graph* a, const szc_graph* b,
                             int32_t* out) {
  if (a == nullptr || b == nullptr || out == nullptr)
    return invalid("null argument");
  return guarded(
      [&] { *out = szc::is_isomorphic(a->impl, b->impl) ? 1 : 0; });
}

szc_status szc_normalize(const szc_graph* g, szc_graph** out_graph,
                         char** out_trace_json) {
  if (g == nullptr || out_graph == nullptr || out_trace_json == nullptr)
    return invalid("null argument");
  return guarded([&] {
    szc::NormalizationResult result = szc::normalize_to_extremal(g->impl);
    szc_status status =
        emit_string(szc::trace_to_json(result.steps), out_trace_json);
    if (status != SZC_OK) throw szc::Error(szc::ErrorCode::Internal, "alloc");
    emit_graph(std::move(result.graph), out_graph);
  });
}

szc_status szc_count_cacti(int32_t n, int32_t k, int32_t ceiling,
                           int64_t* out) {
  if (out == nullptr) return invalid("null output parameter");
  return guarded([&] {
    *out = static_cast<int64_t>(szc::enumerate_cacti(n, k, ceiling).size());
  });
}

szc_status szc_enumerate_graph6(int32_t n, int32_t k, int32_t ceiling,
                                char** out) {
  if (out == nullptr) return invalid("null output parameter");
  return guarded([&] {
    std::string lines;
    for (const szc::Graph& g : szc::enumerate_cacti(n, k, ceiling)) {
      lines += szc::write_graph6(g);
      lines += '\n';
    }
    emit_string(lines, out);
  });
}

szc_status szc_verify_csv_header(char** out) {
  if (out == nullptr) return invalid("null output parameter");
  return emit_string(szc::verification_csv_header(), out);
}

szc_status szc_verify_row_csv(int32_t n, int32_t k, int32_t ceiling,
                              char** out_row, int32_t* out_pass) {
  if (out_row == nullptr || out_pass == nullptr)
    return invalid("null output parameter");
  return guarded([&] {
    szc::VerificationReport report = szc::verify_minimum(n, k, ceiling);
    *out_pass = !report.bounds_proved ? 2 : report.pass() ? 1 : 0;
    emit_string(szc::verification_csv_row(report), out_row);
  });
}

szc_status szc_sweep_csv(int32_t n_max, int32_t k_max, int32_t ceiling,
                         int32_t threads, char** out_table,
                         int32_t* out_all_pass) {
  if (out_table == nullptr || out_all_pass == nullptr)
    return invalid("null output parameter");
  // n_max below the covered range simply yields a header with no rows

  struct Cell {
    int n, k;
    std::string row;
    int pass = 0;
    szc_status status = SZC_OK;
    std::string error;
  };
  std::vector<Cell> cells;
  for (int n = 5; n <= n_max; ++n) {
    int top = (n - 1) / 2;
    if (k_max >= 0) top = std::min(top, static_cast<int>(k_max));
    for (int k = 1; k <= top; ++k) cells.push_back(Cell{n, k});
  }

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= cells.size()) return;
      Cell& cell = cells[i];
      cell.status = guarded([&] {
        szc::VerificationReport report =
            szc::verify_minimum(cell.n, cell.k, ceiling);
        cell.pass = !report.bounds_proved ? 2 : report.pass() ? 1 : 0;
        cell.row = szc::verification_csv_row(report);
      });
      if (cell.status != SZC_OK) cell.error = last_error;
    }
  };

  int thread_count = std::min(resolve_threads(threads),
                              std::max(static_cast<int>(cells.size()), 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < thread_count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const Cell& cell : cells) {
    if (cell.status != SZC_OK) {
      last_error = cell.error;
      return cell.status;
    }
  }

  std::string table = szc::verification_csv_header();
  int all_pass = 1;
  for (const Cell& cell : cells) {
    table += cell.row;
    if (cell.pass == 0) all_pass = 0;
  }
  *out_all_pass = all_pass;
  return emit_string(table, out_table);
}

}  // extern "C"
