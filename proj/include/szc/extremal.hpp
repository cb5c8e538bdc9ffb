#ifndef SZC_EXTREMAL_HPP
#define SZC_EXTREMAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "szc/graph.hpp"

namespace szc {

/// Bundle of k triangles sharing hub 0, plus n-2k-1 pendant vertices at the
/// hub.  This is the minimiser for both indices once n >= 5.
Graph build_c0(int n, int k);

/// Closed-form minima over all cacti with n vertices and k cycles.  The
/// values evaluate for any feasible (n, k); proved marks the n >= 5 range
/// where they are established as exact minima.
struct BoundPair {
  std::int64_t sz_e_min = 0;
  std::int64_t sz_ev_x2_min = 0;
  bool proved = false;
};

BoundPair extremal_bounds(int n, int k);

/// Canonical-form machinery is exact but exponential in the worst case; the
/// limit caps the order it will attempt.
inline constexpr int kCanonicalOrderLimit = 16;

/// Vertex relabeling (old -> new) whose application yields the canonical
/// representative of g's isomorphism class.
std::vector<int> canonical_labeling(const Graph& g,
                                    int limit = kCanonicalOrderLimit);

/// graph6 line of the canonically relabeled graph; equal strings mean
/// isomorphic graphs.
std::string canonical_form(const Graph& g, int limit = kCanonicalOrderLimit);

bool is_isomorphic(const Graph& a, const Graph& b,
                   int limit = kCanonicalOrderLimit);

/// Order of the automorphism group, counted by direct backtracking over
/// adjacency-preserving relabelings.  Independent of the canonical-form
/// search so the two can cross-check each other.
std::int64_t automorphism_count(const Graph& g,
                                int limit = kCanonicalOrderLimit);

inline constexpr int kDefaultEnumerationCeiling = 9;

/// Every connected cactus with n vertices and k cycles, one canonically
/// labeled representative per isomorphism class, sorted by canonical form.
/// Returns an empty list when no such cactus exists.
std::vector<Graph> enumerate_cacti(int n, int k,
                                   int ceiling = kDefaultEnumerationCeiling);

/// Outcome of exhaustively checking the closed-form minima at one (n, k).
struct VerificationReport {
  int n = 0;
  int k = 0;
  std::int64_t class_count = 0;
  std::int64_t labeled_count = 0;
  std::int64_t min_sz_e = 0;
  std::int64_t min_sz_ev_x2 = 0;
  BoundPair bounds;
  std::string min_sz_e_witness;   // canonical form attaining min_sz_e
  std::string min_sz_ev_witness;  // canonical form attaining min_sz_ev_x2
  bool sz_e_unique = false;
  bool sz_ev_unique = false;
  bool witnesses_agree = false;   // one class attains both minima
  bool witness_is_bundle = false; // and it is build_c0(n, k)
  bool bounds_match = false;
  bool bounds_proved = false;     // n >= 5
  bool k_zero = false;            // tree case, outside the stated k >= 1 range

  bool unique_minimizer() const {
    return sz_e_unique && sz_ev_unique && witnesses_agree;
  }
  bool pass() const {
    return bounds_match && unique_minimizer() && witness_is_bundle;
  }
};

VerificationReport verify_minimum(int n, int k,
                                  int ceiling = kDefaultEnumerationCeiling);

std::string verification_csv_header();
std::string verification_csv_row(const VerificationReport& report);

}  // namespace szc

#endif
