#ifndef SZC_TESTS_COMMON_HPP
#define SZC_TESTS_COMMON_HPP

#include <functional>
#include <utility>
#include <vector>

#include "szc/graph.hpp"

namespace szc_test {

// Runs fn, which is expected to throw szc::Error, and reports its code.
// Falls through to Internal when nothing was thrown so the caller's
// comparison fails visibly.
inline szc::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const szc::Error& err) {
    return err.code();
  }
  return szc::ErrorCode::Internal;
}

inline szc::Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return szc::Graph::build(n, std::move(edges));
}

inline szc::Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return szc::Graph::build(n, std::move(edges));
}

// Star with center 0.
inline szc::Graph star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return szc::Graph::build(n, std::move(edges));
}

inline szc::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  return szc::Graph::build(n, std::move(edges));
}

inline std::vector<int> identity_cycle(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace szc_test

#endif
