#ifndef PADV_ENUMERATE_HPP
#define PADV_ENUMERATE_HPP

#include <string>
#include <vector>

#include "padv/vc_solver.hpp"

// Exact offline minimum vertex cover by enumerating advice branches of the
// priority algorithm: depth-first over advice strings, branching whenever a
// run asks for a bit beyond the current prefix. The correct-oracle branch is
// in the tree, so the best valid leaf is the optimum, and the tree has at
// most 2^floor(15n/46) leaves.

namespace padv {

struct EnumerationReport {
  std::vector<int> best_cover;
  int best_size = -1;
  long long leaves_explored = 0;
  std::size_t max_depth = 0;  // longest advice string examined
};

namespace detail {

// Replay that aborts (as a pruned leaf) once the accepted count reaches the
// incumbent. Throws TapeExhaustedError when the prefix runs out.
struct PrunedRun {
  enum class Status { completed, pruned };
  Status status;
  std::vector<int> cover;
  bool valid = false;
};

inline PrunedRun replay_pruned(const Graph& g, const std::string& prefix,
                               const TieBreakPolicy& tiebreak, int prune_at) {
  AdviceTape tape{prefix};
  Algorithm<VertexItem> alg = make_vc_algorithm();
  TieBreaker breaker(tiebreak);
  History<VertexItem> full;
  std::vector<VertexItem> remaining = vertex_items(g);
  int accepted = 0;
  while (!remaining.empty()) {
    if (prune_at >= 0 && accepted >= prune_at) return {PrunedRun::Status::pruned, {}, false};
    History<VertexItem> visible;
    visible.items = full.items;
    visible.decisions = full.decisions;
    PriorityFn<VertexItem> key = alg.make_priority(visible);
    std::size_t idx = select_next_index(remaining, key, breaker);
    VertexItem item = remaining[idx];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    Decision d = alg.decide(item, full, tape);
    if (d == Decision::accept) ++accepted;
    full.items.push_back(std::move(item));
    full.decisions.push_back(d);
  }
  PrunedRun out{PrunedRun::Status::completed, {}, true};
  for (std::size_t i = 0; i < full.items.size(); ++i)
    if (full.decisions[i] == Decision::accept)
      out.cover.push_back(full.items[i].vertex);
  std::sort(out.cover.begin(), out.cover.end());
  std::set<int> in(out.cover.begin(), out.cover.end());
  for (auto [u, v] : g.edges())
    if (!in.count(u) && !in.count(v)) out.valid = false;
  return out;
}

}  // namespace detail

inline EnumerationReport exact_mvc_by_enumeration(const Graph& g,
                                                  const TieBreakPolicy& tiebreak = {},
                                                  bool prune = true) {
  EnumerationReport report;
  report.best_size = g.size() + 1;
  // Bit 0 (reject) first: matches the oracle's reject preference, so the
  // optimal branch tends to be found early.
  std::function<void(const std::string&)> explore = [&](const std::string& prefix) {
    report.max_depth = std::max(report.max_depth, prefix.size());
    try {
      auto run = detail::replay_pruned(g, prefix, tiebreak,
                                       prune ? report.best_size : -1);
      ++report.leaves_explored;  // completed and pruned runs both count
      if (run.status == detail::PrunedRun::Status::completed && run.valid &&
          static_cast<int>(run.cover.size()) < report.best_size) {
        report.best_size = static_cast<int>(run.cover.size());
        report.best_cover = run.cover;
      }
    } catch (const TapeExhaustedError&) {
      explore(prefix + '0');
      explore(prefix + '1');
    }
  };
  explore("");
  return report;
}

}  // namespace padv

#endif  // PADV_ENUMERATE_HPP
