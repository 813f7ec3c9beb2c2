#ifndef PADV_TESTS_HELPERS_HPP
#define PADV_TESTS_HELPERS_HPP

#include <optional>
#include <set>
#include <vector>

#include "padv/graph.hpp"
#include "padv/oracle.hpp"

// Independent reference implementations used to cross-check the library's
// branch-and-bound solver before its values are trusted elsewhere.

namespace padv_tests {

// Bitmask minimum vertex cover; only usable for small n.
inline std::optional<int> bitmask_mvc(const padv::Graph& g,
                                      const padv::CoverConstraint& c = {}) {
  int n = g.size();
  auto edges = g.edges();
  unsigned in_mask = 0, out_mask = 0;
  for (int v : c.forced_in) in_mask |= 1u << v;
  for (int v : c.forced_out) out_mask |= 1u << v;
  if (in_mask & out_mask) return std::nullopt;
  std::optional<int> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if ((mask & in_mask) != in_mask || (mask & out_mask)) continue;
    bool covers = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        covers = false;
        break;
      }
    if (!covers) continue;
    int size = __builtin_popcount(mask);
    if (!best || size < *best) best = size;
  }
  return best;
}

// All minimum covers of g, as sorted vertex sets; only usable for small n.
inline std::vector<std::set<int>> all_min_covers(const padv::Graph& g) {
  int n = g.size();
  auto edges = g.edges();
  std::vector<std::set<int>> best;
  int best_size = n + 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        covers = false;
        break;
      }
    if (!covers) continue;
    int size = __builtin_popcount(mask);
    if (size > best_size) continue;
    if (size < best_size) {
      best.clear();
      best_size = size;
    }
    std::set<int> cover;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) cover.insert(v);
    best.push_back(std::move(cover));
  }
  return best;
}

// Visits every simple graph with maximum degree <= 3 on n labeled vertices.
template <typename Fn>
void for_each_max3_graph(int n, Fn&& visit) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == all.size()) {
      visit(padv::Graph(n, chosen));
      return;
    }
    self(self, i + 1);
    auto [u, v] = all[i];
    if (degree[static_cast<std::size_t>(u)] < 3 &&
        degree[static_cast<std::size_t>(v)] < 3) {
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
      chosen.push_back(all[i]);
      self(self, i + 1);
      chosen.pop_back();
      --degree[static_cast<std::size_t>(u)];
      --degree[static_cast<std::size_t>(v)];
    }
  };
  rec(rec, 0);
}

inline padv::Graph petersen() {
  return padv::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline padv::Graph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  es.push_back({0, n - 1});
  return padv::Graph(n, es);
}

inline padv::Graph k4() {
  return padv::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace padv_tests

#endif
