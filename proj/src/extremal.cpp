#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "szc/extremal.hpp"
#include "szc/graph_io.hpp"
#include "szc/szeged.hpp"

namespace szc {

namespace {

void require_feasible(int n, int k) {
  if (n < 1) fail(ErrorCode::InfeasibleParameters, "order must be positive");
  if (k < 0)
    fail(ErrorCode::InfeasibleParameters, "cycle count must be nonnegative");
  if (n < 2 * k + 1)
    fail(ErrorCode::InfeasibleParameters,
         std::to_string(k) + " cycles need at least " +
             std::to_string(2 * k + 1) + " vertices, got " +
             std::to_string(n));
}

}  // namespace

Graph build_c0(int n, int k) {
  require_feasible(n, k);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1 + k);
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, 2 * i - 1);
    edges.emplace_back(0, 2 * i);
    edges.emplace_back(2 * i - 1, 2 * i);
  }
  for (int v = 2 * k + 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::build(n, std::move(edges));
}

BoundPair extremal_bounds(int n, int k) {
  require_feasible(n, k);
  const std::int64_t nn = n, kk = k;
  BoundPair out;
  out.sz_e_min = 2 * kk * nn + 2 * kk * kk - 5 * kk;
  out.sz_ev_x2_min = nn * nn - 3 * nn + 3 * kk * nn - 5 * kk + 2;
  out.proved = n >= 5;
  return out;
}

VerificationReport verify_minimum(int n, int k, int ceiling) {
  VerificationReport report;
  report.n = n;
  report.k = k;
  report.bounds = extremal_bounds(n, k);
  report.bounds_proved = report.bounds.proved;
  report.k_zero = k == 0;

  std::vector<Graph> classes = enumerate_cacti(n, k, ceiling);
  if (classes.empty())
    fail(ErrorCode::Internal, "feasible parameters produced no cacti");

  const int limit = std::max(kCanonicalOrderLimit, n);
  std::int64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;

  bool first = true;
  for (const Graph& g : classes) {
    IndexReport indices = compute_indices(g);
    std::string form = write_graph6(g);  // enumeration emits canonical labels
    report.labeled_count += factorial / automorphism_count(g, limit);
    if (first || indices.edge_szeged < report.min_sz_e) {
      report.min_sz_e = indices.edge_szeged;
      report.min_sz_e_witness = form;
      report.sz_e_unique = true;
    } else if (indices.edge_szeged == report.min_sz_e) {
      report.sz_e_unique = false;
    }
    if (first || indices.edge_vertex_szeged_x2 < report.min_sz_ev_x2) {
      report.min_sz_ev_x2 = indices.edge_vertex_szeged_x2;
      report.min_sz_ev_witness = form;
      report.sz_ev_unique = true;
    } else if (indices.edge_vertex_szeged_x2 == report.min_sz_ev_x2) {
      report.sz_ev_unique = false;
    }
    first = false;
  }

  report.class_count = static_cast<std::int64_t>(classes.size());
  std::string bundle = canonical_form(build_c0(n, k), limit);
  report.witnesses_agree =
      report.min_sz_e_witness == report.min_sz_ev_witness;
  report.witness_is_bundle =
      report.witnesses_agree && report.min_sz_e_witness == bundle;
  report.bounds_match = report.min_sz_e == report.bounds.sz_e_min &&
                        report.min_sz_ev_x2 == report.bounds.sz_ev_x2_min;
  return report;
}

std::string verification_csv_header() {
  return "n,k,count_isoclasses,min_sz_e,bound_sz_e,min_sz_ev_x2,"
         "bound_sz_ev_x2,unique_minimizer,pass\n";
}

std::string verification_csv_row(const VerificationReport& report) {
  std::ostringstream out;
  out << report.n << ',' << report.k << ',' << report.class_count << ','
      << report.min_sz_e << ',' << report.bounds.sz_e_min << ','
      << report.min_sz_ev_x2 << ',' << report.bounds.sz_ev_x2_min << ','
      << (report.unique_minimizer() ? "true" : "false") << ',';
  if (!report.bounds_proved)
    out << "out_of_range";
  else
    out << (report.pass() ? "true" : "false");
  out << '\n';
  return out.str();
}

}  // namespace szc
