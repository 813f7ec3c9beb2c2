#ifndef PADV_ORACLE_HPP
#define PADV_ORACLE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "padv/graph.hpp"

// Exact constrained minimum vertex cover (branch and bound, desk scale) and
// the advice-bit oracle with the reject preference: a degree-3 vertex gets
// advice 1 (accept) only when no optimum consistent with the current state
// rejects it.

namespace padv {

struct CoverConstraint {
  std::vector<int> forced_in;   // already accepted
  std::vector<int> forced_out;  // already rejected
};

namespace detail {

enum class Mark : unsigned char { undecided, in, out };

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g)
      : g_(g), mark_(static_cast<std::size_t>(g.size()), Mark::undecided) {}

  // Minimum cover size respecting the constraint, or nullopt if some edge
  // has both endpoints forced out.
  std::optional<int> solve(const CoverConstraint& c) {
    for (int v : c.forced_in) mark_[static_cast<std::size_t>(v)] = Mark::in;
    for (int v : c.forced_out) {
      auto& m = mark_[static_cast<std::size_t>(v)];
      if (m == Mark::in) return std::nullopt;
      m = Mark::out;
    }
    int base = 0;
    for (Mark m : mark_)
      if (m == Mark::in) ++base;
    best_ = g_.size() + 1;
    branch(base);
    if (best_ > g_.size()) return std::nullopt;
    return best_;
  }

 private:
  // Residual degree: edges to vertices not yet covered by an "in" endpoint.
  int residual_degree(int v) const {
    int d = 0;
    for (int u : g_.neighbors(v))
      if (mark_[static_cast<std::size_t>(u)] != Mark::in) ++d;
    return d;
  }

  bool uncovered(int u, int v) const {
    return mark_[static_cast<std::size_t>(u)] != Mark::in &&
           mark_[static_cast<std::size_t>(v)] != Mark::in;
  }

  // Greedy maximal matching over uncovered edges between non-out-forced...
  // every uncovered edge needs one endpoint, and matching edges are
  // vertex-disjoint, so the matching size lower-bounds the remaining cost.
  int matching_lower_bound() const {
    std::vector<char> used(static_cast<std::size_t>(g_.size()), 0);
    int count = 0;
    for (int u = 0; u < g_.size(); ++u) {
      if (used[static_cast<std::size_t>(u)]) continue;
      for (int v : g_.neighbors(u)) {
        if (u < v && !used[static_cast<std::size_t>(v)] && uncovered(u, v)) {
          used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
          ++count;
          break;
        }
      }
    }
    return count;
  }

  void branch(int taken) {
    if (taken + matching_lower_bound() >= best_) return;

    // Forced moves: an undecided neighbor of an uncovered out-vertex must go
    // in; an uncovered edge between two out-vertices is infeasible.
    std::vector<int> forced;
    for (int u = 0; u < g_.size(); ++u) {
      if (mark_[static_cast<std::size_t>(u)] != Mark::out) continue;
      for (int v : g_.neighbors(u)) {
        switch (mark_[static_cast<std::size_t>(v)]) {
          case Mark::out: return;  // uncovered edge, infeasible branch
          case Mark::undecided: forced.push_back(v); break;
          case Mark::in: break;
        }
      }
    }
    if (!forced.empty()) {
      std::sort(forced.begin(), forced.end());
      forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
      for (int v : forced) mark_[static_cast<std::size_t>(v)] = Mark::in;
      branch(taken + static_cast<int>(forced.size()));
      for (int v : forced) mark_[static_cast<std::size_t>(v)] = Mark::undecided;
      return;
    }

    // Pick an undecided vertex of maximal residual degree.
    int pick = -1, pick_deg = -1;
    for (int v = 0; v < g_.size(); ++v) {
      if (mark_[static_cast<std::size_t>(v)] != Mark::undecided) continue;
      int d = residual_degree(v);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick == -1 || pick_deg == 0) {
      // Isolated-in-residual vertices never help; everything is covered.
      best_ = std::min(best_, taken);
      return;
    }
    if (pick_deg == 1) {
      // Take the neighbor of a residual-degree-1 vertex instead of the
      // vertex itself; some minimum cover does so.
      int nbr = -1;
      for (int u : g_.neighbors(pick))
        if (mark_[static_cast<std::size_t>(u)] != Mark::in) nbr = u;
      if (mark_[static_cast<std::size_t>(nbr)] == Mark::out) {
        mark_[static_cast<std::size_t>(pick)] = Mark::in;
        branch(taken + 1);
        mark_[static_cast<std::size_t>(pick)] = Mark::undecided;
      } else {
        Mark saved = mark_[static_cast<std::size_t>(nbr)];
        mark_[static_cast<std::size_t>(nbr)] = Mark::in;
        branch(taken + 1);
        mark_[static_cast<std::size_t>(nbr)] = saved;
      }
      return;
    }
    // Branch: pick in, or pick out (forcing its neighbors in above).
    mark_[static_cast<std::size_t>(pick)] = Mark::in;
    branch(taken + 1);
    mark_[static_cast<std::size_t>(pick)] = Mark::out;
    branch(taken);
    mark_[static_cast<std::size_t>(pick)] = Mark::undecided;
  }

  const Graph& g_;
  std::vector<Mark> mark_;
  int best_ = 0;
};

}  // namespace detail

inline std::optional<int> min_vertex_cover_size(const Graph& g,
                                                const CoverConstraint& c = {}) {
  return detail::CoverSearch(g).solve(c);
}

struct CoverResult {
  int size = 0;
  std::vector<int> witness;  // sorted; lexicographically least optimum
};

// Deterministic witness: among minimum covers respecting the constraint, the
// one whose sorted vertex list is lexicographically least.
inline std::optional<CoverResult> min_vertex_cover(const Graph& g,
                                                   const CoverConstraint& c = {}) {
  auto opt = min_vertex_cover_size(g, c);
  if (!opt) return std::nullopt;
  CoverConstraint work = c;
  std::vector<char> decided(static_cast<std::size_t>(g.size()), 0);
  for (int v : c.forced_in) decided[static_cast<std::size_t>(v)] = 1;
  for (int v : c.forced_out) decided[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < g.size(); ++v) {
    if (decided[static_cast<std::size_t>(v)]) continue;
    work.forced_in.push_back(v);
    if (min_vertex_cover_size(g, work) == opt) continue;
    work.forced_in.pop_back();
    work.forced_out.push_back(v);
  }
  std::vector<int> witness = work.forced_in;
  std::sort(witness.begin(), witness.end());
  return CoverResult{*opt, std::move(witness)};
}

// Advice bit for a residual-degree-3 vertex v: 0 (reject) iff rejecting v
// still admits a cover of the current constrained optimum size, else 1.
inline int oracle_advice_bit(const Graph& g, const CoverConstraint& c, int v) {
  auto base = min_vertex_cover_size(g, c);
  if (!base) throw GraphError("oracle queried on an infeasible constraint");
  CoverConstraint rejecting = c;
  rejecting.forced_out.push_back(v);
  auto with_v_out = min_vertex_cover_size(g, rejecting);
  return (with_v_out && *with_v_out == *base) ? 0 : 1;
}

}  // namespace padv

#endif  // PADV_ORACLE_HPP
