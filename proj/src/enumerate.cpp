#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "szc/extremal.hpp"
#include "szc/graph_io.hpp"

namespace szc {

namespace {

std::mutex enumeration_mutex;
std::map<std::pair<int, int>, std::vector<Graph>> enumeration_memo;

// Every cactus owns a leaf block: a pendant edge, or a cycle whose vertices
// all have degree 2 except the attachment. Stripping it gives a smaller
// cactus, so growing smaller ones by a pendant vertex or a fresh cycle at
// every vertex reaches every class; canonical forms dedupe the results.
std::vector<Graph> compute(int n, int k, int canonical_limit) {
  if (n < 1 || k < 0 || n < 2 * k + 1) return {};
  auto found = enumeration_memo.find({n, k});
  if (found != enumeration_memo.end()) return found->second;

  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph::build(1, {}));
  } else {
    std::set<std::string> forms;
    auto grow = [&](const Graph& base, auto&& extend) {
      for (int v = 0; v < base.order(); ++v) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(base.size() + 3);
        for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v);
        extend(edges, v);
        forms.insert(
            canonical_form(Graph::build(n, std::move(edges)), canonical_limit));
      }
    };

    for (const Graph& base : compute(n - 1, k, canonical_limit))
      grow(base, [&](std::vector<std::pair<int, int>>& edges, int v) {
        edges.emplace_back(v, n - 1);
      });

    for (int len = 3; len <= n && k >= 1; ++len) {
      int base_order = n - (len - 1);
      for (const Graph& base : compute(base_order, k - 1, canonical_limit))
        grow(base, [&](std::vector<std::pair<int, int>>& edges, int v) {
          int prev = v;
          for (int j = 0; j < len - 1; ++j) {
            edges.emplace_back(prev, base_order + j);
            prev = base_order + j;
          }
          edges.emplace_back(prev, v);
        });
    }

    out.reserve(forms.size());
    for (const std::string& form : forms) out.push_back(parse_graph6(form));
  }
  enumeration_memo.emplace(std::make_pair(n, k), out);
  return out;
}

}  // namespace

std::vector<Graph> enumerate_cacti(int n, int k, int ceiling) {
  if (ceiling < 1)
    fail(ErrorCode::InvalidArgument, "enumeration ceiling must be positive");
  if (n > ceiling)
    fail(ErrorCode::TooLarge, "order " + std::to_string(n) +
                                  " above enumeration ceiling " +
                                  std::to_string(ceiling));
  int canonical_limit = std::max(kCanonicalOrderLimit, ceiling);
  std::lock_guard<std::mutex> lock(enumeration_mutex);
  return compute(n, k, canonical_limit);
}

}  // namespace szc
