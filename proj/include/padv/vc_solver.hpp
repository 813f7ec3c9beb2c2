#ifndef PADV_VC_SOLVER_HPP
#define PADV_VC_SOLVER_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "padv/framework.hpp"
#include "padv/graph.hpp"
#include "padv/oracle.hpp"

// The adaptive priority algorithm with advice for minimum vertex cover on
// graphs of maximum degree 3 (Model 2). Six priority tiers; advice is read
// only when a residual-degree-3 vertex is processed, and the total never
// exceeds floor(15n/46).

namespace padv {

// Execution state of a run, reconstructible from (items, decisions) alone —
// this is what makes the algorithm a Model 2 algorithm.
struct SolverState {
  std::set<int> processed;
  std::set<int> accepted;
  std::set<int> rejected;
  std::set<int> advised_accept;  // decision came from an advice bit of 1
  std::set<int> seen;            // appeared in any processed item
  std::map<int, std::vector<int>> adjacency;  // of processed vertices
  std::optional<int> last_processed;
  std::size_t bits_read = 0;

  int residual_degree(const VertexItem& item) const {
    int d = 0;
    for (int u : item.neighbors)
      if (!processed.count(u)) ++d;
    return d;
  }
};

struct TierKey {
  int tier = 6;        // 1..6, lower = higher priority
  long long shared = 0;  // tier 5: current neighbors shared with an advised accept
  int seen_flag = 0;     // tier 5: some neighbor already seen
  int chain_flag = 0;    // tier 6: neighbor of the vertex just processed

  PriorityKey to_priority_key() const {
    return {-tier, tier == 5 ? shared : static_cast<long long>(chain_flag),
            seen_flag};
  }
};

// Tier of an unprocessed vertex, in priority order:
//   T1 rejected neighbor (accept)      T4 neighbor of a satisfied advised
//   T2 residual degree 0 (reject)         accept (reject)
//   T3 residual degree 1 (reject)      T5 residual degree 3 (advice)
//                                      T6 residual degree 2 (chain)
inline TierKey tier_of(const SolverState& s, const VertexItem& item) {
  for (int u : item.neighbors)
    if (s.rejected.count(u)) return {1, 0, 0, 0};
  int rd = s.residual_degree(item);
  if (rd == 0) return {2, 0, 0, 0};
  if (rd == 1) return {3, 0, 0, 0};
  for (int a : s.advised_accept) {
    const auto& na = s.adjacency.at(a);
    bool adjacent = std::find(na.begin(), na.end(), item.vertex) != na.end();
    if (!adjacent) continue;
    for (int u : na)
      if (s.accepted.count(u)) return {4, 0, 0, 0};
  }
  if (rd == 3) {
    long long shared = 0;
    for (int a : s.advised_accept) {
      const auto& na = s.adjacency.at(a);
      long long common = 0;
      for (int u : item.neighbors)
        if (!s.processed.count(u) &&
            std::find(na.begin(), na.end(), u) != na.end())
          ++common;
      shared = std::max(shared, common);
    }
    int seen_flag = 0;
    for (int u : item.neighbors)
      if (s.seen.count(u)) seen_flag = 1;
    return {5, shared, seen_flag, 0};
  }
  int chain = (s.last_processed && std::find(item.neighbors.begin(),
                                             item.neighbors.end(),
                                             *s.last_processed) !=
                                       item.neighbors.end())
                  ? 1
                  : 0;
  return {6, 0, 0, chain};
}

namespace detail {

// Replay the tier logic over a (items, decisions) history. Advice reads are
// deduced from the decisions, so no tape is needed.
inline void apply_step(SolverState& s, const VertexItem& item, Decision d) {
  TierKey key = tier_of(s, item);
  if (key.tier == 5 && key.shared < 2) {
    ++s.bits_read;
    if (d == Decision::accept) s.advised_accept.insert(item.vertex);
  }
  s.processed.insert(item.vertex);
  s.seen.insert(item.vertex);
  for (int u : item.neighbors) s.seen.insert(u);
  s.adjacency[item.vertex] = item.neighbors;
  (d == Decision::accept ? s.accepted : s.rejected).insert(item.vertex);
  s.last_processed = item.vertex;
}

inline SolverState rebuild_state(const History<VertexItem>& h) {
  SolverState s;
  for (std::size_t i = 0; i < h.items.size(); ++i)
    apply_step(s, h.items[i], h.decisions[i]);
  return s;
}

}  // namespace detail

// The advice source consulted at each tier-5 read. In oracle mode it runs
// the exact solver on the whole graph; in replay mode it reads the tape.
using AdviceBitSource = std::function<int(const SolverState&, int vertex)>;

inline Algorithm<VertexItem> make_vc_algorithm(AdviceBitSource oracle = nullptr) {
  Algorithm<VertexItem> alg;
  alg.model = ModelTag::model2;
  alg.decision_set = {Decision::accept, Decision::reject};
  alg.make_priority = [](const History<VertexItem>& h) -> PriorityFn<VertexItem> {
    auto state = std::make_shared<SolverState>(detail::rebuild_state(h));
    return [state](const VertexItem& item) {
      return tier_of(*state, item).to_priority_key();
    };
  };
  alg.decide = [oracle](const VertexItem& item, const History<VertexItem>& h,
                        AdviceTape& tape) {
    SolverState state = detail::rebuild_state(h);
    TierKey key = tier_of(state, item);
    switch (key.tier) {
      case 1: return Decision::accept;
      case 2:
      case 3:
      case 4: return Decision::reject;
      case 5: {
        if (key.shared >= 2) return Decision::accept;  // deducible, no advice
        std::string bit = tape.read(1, [&]() {
          return static_cast<char>('0' + oracle(state, item.vertex));
        });
        return bit == "1" ? Decision::accept : Decision::reject;
      }
      default:
        // Tier 6 entry and chain continuation both reject; accepts along a
        // chain arrive through tier 1.
        return Decision::reject;
    }
  };
  return alg;
}

struct SolveResult {
  std::vector<int> cover;  // sorted
  std::string advice;
  Trace trace;
};

inline std::vector<int> accepted_of(const Trace& trace) {
  std::vector<int> cover;
  for (const auto& step : trace.steps)
    if (step.decision == Decision::accept)
      cover.push_back(std::stoi(step.item_id));
  std::sort(cover.begin(), cover.end());
  return cover;
}

// Run with the cooperating oracle attached; the tape records the advice.
inline SolveResult solve_with_oracle(const Graph& g,
                                     const TieBreakPolicy& tiebreak = {}) {
  AdviceBitSource oracle = [&g](const SolverState& s, int v) {
    CoverConstraint c{{s.accepted.begin(), s.accepted.end()},
                      {s.rejected.begin(), s.rejected.end()}};
    return oracle_advice_bit(g, c, v);
  };
  AdviceTape tape;
  Trace trace = run_priority_algorithm(make_vc_algorithm(oracle),
                                       vertex_items(g), tape, tiebreak);
  return {accepted_of(trace), tape.bits(), trace};
}

struct ReplayOutcome {
  bool valid = false;      // a vertex cover was produced
  bool exhausted = false;  // the tape ran out mid-run
  std::vector<int> cover;
  Trace trace;
};

// Identical tier logic reading bits from a fixed tape. Invalidity (tape
// exhaustion or a non-cover) is an outcome, not an error.
inline ReplayOutcome replay_with_advice(const Graph& g, const std::string& advice,
                                        const TieBreakPolicy& tiebreak = {}) {
  AdviceTape tape{advice};
  ReplayOutcome out;
  try {
    out.trace = run_priority_algorithm(make_vc_algorithm(), vertex_items(g),
                                       tape, tiebreak);
  } catch (const TapeExhaustedError&) {
    out.exhausted = true;
    return out;
  }
  out.cover = accepted_of(out.trace);
  std::set<int> in(out.cover.begin(), out.cover.end());
  out.valid = true;
  for (auto [u, v] : g.edges())
    if (!in.count(u) && !in.count(v)) out.valid = false;
  return out;
}

inline bool check_advice_budget(int n, std::size_t bits) {
  return bits <= static_cast<std::size_t>(15LL * n / 46);
}

// ---- Component audit ----
// Mirrors the accounting of the advice bound: per connected component,
// the number k of advice-receiving vertices and the counts k0..k3 of
// non-advice vertices by type (number of neighbors among advice receivers).

struct ComponentRecord {
  std::vector<int> members;           // sorted
  std::vector<int> advised;           // vertices where a bit was read
  std::vector<int> advised_accepts;   // the subset whose bit was 1
  int k0 = 0, k1 = 0, k2 = 0, k3 = 0;
  int advice_count() const { return static_cast<int>(advised.size()); }
  int size() const { return static_cast<int>(members.size()); }
};

struct ComponentAudit {
  std::vector<ComponentRecord> components;
};

inline ComponentAudit audit_components(const Trace& trace, const Graph& g) {
  if (trace.steps.size() != static_cast<std::size_t>(g.size()))
    throw GraphError("trace does not match graph");
  std::set<int> advised, advised_accepts;
  for (const auto& step : trace.steps) {
    int v = std::stoi(step.item_id);
    if (v < 0 || v >= g.size()) throw GraphError("trace does not match graph");
    if (step.bits_read > 0) {
      advised.insert(v);
      if (step.decision == Decision::accept) advised_accepts.insert(v);
    }
  }
  ComponentAudit audit;
  for (auto& members : g.connected_components()) {
    ComponentRecord rec;
    rec.members = members;
    for (int v : members) {
      if (advised.count(v)) {
        rec.advised.push_back(v);
        if (advised_accepts.count(v)) rec.advised_accepts.push_back(v);
        continue;
      }
      int type = 0;
      for (int u : g.neighbors(v))
        if (advised.count(u)) ++type;
      (type == 0 ? rec.k0 : type == 1 ? rec.k1 : type == 2 ? rec.k2 : rec.k3)++;
    }
    audit.components.push_back(std::move(rec));
  }
  return audit;
}

}  // namespace padv

#endif  // PADV_VC_SOLVER_HPP
