#ifndef PADV_LOWER_BOUNDS_HPP
#define PADV_LOWER_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "padv/framework.hpp"
#include "padv/graph.hpp"
#include "padv/thorny.hpp"

// Lower-bound machinery: the binary-entropy advice threshold, the gadget
// ratio templates (minimization and maximization), the string-guessing
// reduction engine with the vertex-cover gadget pairs, and the thorny-path
// adversary that fools any finite family of advice-free algorithms.

namespace padv {

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// H(p) = -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0 by continuity.
inline double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("binary_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

// Advice below (1 - H(eps)) * n / s forces eps*n mistakes through gadgets of
// size s.
inline double advice_threshold(double eps, long long n, int s) {
  if (eps <= 0.0 || eps > 0.5)
    throw DomainError("advice_threshold: eps outside (0, 1/2]");
  if (s < 1) throw DomainError("advice_threshold: s must be >= 1");
  return (1.0 - binary_entropy(eps)) * static_cast<double>(n) / s;
}

enum class ProblemKind { minimization, maximization };

struct RatioSpec {
  double opt_a = 0, opt_r = 0, bad_a = 0, bad_r = 0;
  ProblemKind kind = ProblemKind::minimization;
};

inline double ratio_bound(const RatioSpec& spec, double eps) {
  if (eps <= 0.0 || eps > 0.5)
    throw DomainError("ratio_bound: eps outside (0, 1/2]");
  if (spec.kind == ProblemKind::minimization) {
    double r = std::min(spec.bad_a / spec.opt_a, spec.bad_r / spec.opt_r);
    if (r < 1.0)
      throw DomainError("ratio_bound: gadget pair fails the distinguishing cost");
    return 1.0 + eps * (r - 1.0) * spec.opt_a /
                     (eps * spec.opt_a + (1.0 - eps) * spec.opt_r);
  }
  double r = std::min(spec.opt_a / spec.bad_a, spec.opt_r / spec.bad_r);
  if (r < 1.0)
    throw DomainError("ratio_bound: gadget pair fails the distinguishing cost");
  return 1.0 + eps * (r - 1.0) * spec.opt_a /
                   (eps * spec.opt_a + (1.0 - eps) * r * spec.opt_r);
}

// The six summary rows: gadget parameters imported by reference for every
// problem except vertex cover, whose gadgets are materialized below.
struct BoundTableRow {
  std::string problem;
  RatioSpec spec;
  int s = 1;  // max gadget size, divisor of the advice threshold
};

inline const std::vector<BoundTableRow>& bound_table() {
  static const std::vector<BoundTableRow> rows = {
      {"maximum-independent-set", {3, 3, 2, 2, ProblemKind::maximization}, 8},
      {"maximum-bipartite-matching", {3, 3, 2, 2, ProblemKind::maximization}, 3},
      {"maximum-cut", {15, 15, 14, 14, ProblemKind::maximization}, 8},
      {"minimum-vertex-cover", {3, 3, 4, 4, ProblemKind::minimization}, 7},
      {"maximum-3-satisfiability", {8, 8, 7, 7, ProblemKind::maximization}, 3},
      {"unit-job-scheduling", {6, 6, 5, 5, ProblemKind::maximization}, 9},
  };
  return rows;
}

// ---- Vertex-cover gadget pairs ----
// A gadget pair shares a 245-item universe over seven names (each name as a
// degree-2 item with every pair of the others, and as a degree-3 item with
// every triple). The accept variant's optimum accepts the first item, the
// reject variant's optimum rejects it; either way OPT = 3 and BAD = 4.

struct GadgetSpec {
  std::vector<VertexItem> universe;
  std::vector<VertexItem> accept_items;  // G^a
  std::vector<VertexItem> reject_items;  // G^r
  int opt_a = 3, opt_r = 3, bad_a = 4, bad_r = 4;
  int s = 7;
  ProblemKind kind = ProblemKind::minimization;
};

namespace detail {

// Neighbor roles (1-based) per role in each gadget graph.
inline const std::map<int, std::vector<int>>& gadget_roles(GadgetVariant which) {
  static const std::map<int, std::vector<int>> g1 = {
      {1, {2, 6}}, {2, {1, 3}}, {3, {2, 4, 7}}, {4, {3, 5}},
      {5, {4, 6, 7}}, {6, {1, 5}}, {7, {3, 5}}};
  static const std::map<int, std::vector<int>> g2 = {
      {1, {2, 3, 4}}, {2, {1, 5, 6}}, {3, {1, 6, 7}}, {4, {1, 5, 7}},
      {5, {2, 4}}, {6, {2, 3}}, {7, {3, 4}}};
  return which == GadgetVariant::one ? g1 : g2;
}

// Items of a gadget graph under a role -> name assignment.
inline std::vector<VertexItem> gadget_items(GadgetVariant which,
                                            const std::array<int, 7>& name_of_role) {
  std::vector<VertexItem> items;
  for (const auto& [role, nbr_roles] : gadget_roles(which)) {
    VertexItem item;
    item.vertex = name_of_role[static_cast<std::size_t>(role - 1)];
    for (int nr : nbr_roles)
      item.neighbors.push_back(name_of_role[static_cast<std::size_t>(nr - 1)]);
    std::sort(item.neighbors.begin(), item.neighbors.end());
    items.push_back(std::move(item));
  }
  return items;
}

// Fill roles consistently with the first item: its vertex takes first_role,
// its sorted neighbors take that role's neighbor roles in ascending order,
// and the remaining names fill the remaining roles ascending.
inline std::array<int, 7> assign_roles(GadgetVariant which, int first_role,
                                       const VertexItem& first_item,
                                       const std::vector<int>& names) {
  std::array<int, 7> name_of_role{};
  name_of_role.fill(-1);
  std::set<int> placed;
  name_of_role[static_cast<std::size_t>(first_role - 1)] = first_item.vertex;
  placed.insert(first_item.vertex);
  std::vector<int> nbr_roles = gadget_roles(which).at(first_role);
  std::sort(nbr_roles.begin(), nbr_roles.end());
  std::vector<int> nbrs = first_item.neighbors;
  std::sort(nbrs.begin(), nbrs.end());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    name_of_role[static_cast<std::size_t>(nbr_roles[i] - 1)] = nbrs[i];
    placed.insert(nbrs[i]);
  }
  std::vector<int> rest;
  for (int name : names)
    if (!placed.count(name)) rest.push_back(name);
  std::sort(rest.begin(), rest.end());
  std::size_t next = 0;
  for (auto& slot : name_of_role)
    if (slot == -1) slot = rest[next++];
  return name_of_role;
}

}  // namespace detail

// The 245-item universe over the seven names of gadget pair j.
inline std::vector<VertexItem> gadget_universe(const std::vector<int>& names) {
  std::vector<VertexItem> universe;
  for (int v : names) {
    std::vector<int> others;
    for (int u : names)
      if (u != v) others.push_back(u);
    int m = static_cast<int>(others.size());
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        universe.push_back({v, {others[static_cast<std::size_t>(a)],
                                others[static_cast<std::size_t>(b)]}});
        for (int cth = b + 1; cth < m; ++cth)
          universe.push_back({v,
                              {others[static_cast<std::size_t>(a)],
                               others[static_cast<std::size_t>(b)],
                               others[static_cast<std::size_t>(cth)]}});
      }
  }
  for (auto& item : universe)
    std::sort(item.neighbors.begin(), item.neighbors.end());
  return universe;
}

// Concrete gadget pair whose designated first item is `first_item`:
//   degree 2 -> (Graph 1 at role 1, Graph 1 at role 2)
//   degree 3 -> (Graph 1 at role 3, Graph 2 at role 1)
inline GadgetSpec instantiate_vc_gadget_pair(const std::vector<int>& names,
                                             const VertexItem& first_item) {
  if (names.size() != 7)
    throw DomainError("gadget pair needs a pool of exactly 7 names");
  GadgetSpec spec;
  spec.universe = gadget_universe(names);
  std::size_t deg = first_item.neighbors.size();
  if (deg == 2) {
    spec.accept_items = detail::gadget_items(
        GadgetVariant::one,
        detail::assign_roles(GadgetVariant::one, 1, first_item, names));
    spec.reject_items = detail::gadget_items(
        GadgetVariant::one,
        detail::assign_roles(GadgetVariant::one, 2, first_item, names));
  } else if (deg == 3) {
    spec.accept_items = detail::gadget_items(
        GadgetVariant::one,
        detail::assign_roles(GadgetVariant::one, 3, first_item, names));
    spec.reject_items = detail::gadget_items(
        GadgetVariant::two,
        detail::assign_roles(GadgetVariant::two, 1, first_item, names));
  } else {
    throw DomainError("no gadget pair for first-item degree " +
                      std::to_string(deg));
  }
  return spec;
}

// ---- Reduction from binary string guessing ----

struct SGKHInstance {
  std::string bits;  // the hidden string x_1..x_n
  std::size_t length() const { return bits.size(); }
};

struct ReductionTrace {
  std::size_t instance_length = 0;  // items presented to the wrapped algorithm
  long long alg_value = 0;
  long long opt_value = 0;
  int mistakes = 0;
  std::string guesses;
  std::vector<char> chosen_variants;  // 'a' or 'r' per gadget, in pair order
  Trace trace;                        // the wrapped algorithm's full trace
};

// Runs the reduction: maintains R (remaining gadget universes) and Q
// (pending items of chosen gadgets), always presenting the item of maximal
// wrapped-algorithm priority across R and Q. A first-item decision is mapped
// to a guess (accept -> 0); the revealed x_i then selects which variant's
// items enter Q. The reduction reads no advice of its own.
inline ReductionTrace run_sgkh_reduction(const Algorithm<VertexItem>& wrapped,
                                         const SGKHInstance& x,
                                         const TieBreakPolicy& tiebreak = {},
                                         AdviceTape* tape = nullptr) {
  const auto n = static_cast<long long>(x.length());
  AdviceTape own_tape;  // generating and never written: the wrapped
  if (!tape) tape = &own_tape;  // algorithm here is advice-free

  struct PairState {
    std::vector<int> names;
    bool chosen = false;
  };
  std::vector<PairState> pairs;
  std::vector<VertexItem> R;
  std::map<int, std::size_t> pair_of_name;
  for (long long j = 0; j < n; ++j) {
    PairState ps;
    for (int t = 0; t < 7; ++t) {
      int name = static_cast<int>(7 * j) + t;
      ps.names.push_back(name);
      pair_of_name[name] = static_cast<std::size_t>(j);
    }
    auto universe = gadget_universe(ps.names);
    R.insert(R.end(), universe.begin(), universe.end());
    pairs.push_back(std::move(ps));
  }

  std::vector<VertexItem> Q;
  ReductionTrace out;
  out.opt_value = 3 * n;
  History<VertexItem> full;
  TieBreaker breaker(tiebreak);
  std::size_t i = 0;

  auto present = [&](std::vector<VertexItem>& source, std::size_t idx) {
    VertexItem item = std::move(source[idx]);
    source.erase(source.begin() + static_cast<std::ptrdiff_t>(idx));
    Decision d = wrapped.decide(item, full, *tape);
    if (d != Decision::accept && d != Decision::reject)
      throw ContractViolationError("wrapped algorithm left the decision set");
    out.trace.steps.push_back({item.id(), d, 0});
    if (d == Decision::accept) ++out.alg_value;
    full.items.push_back(std::move(item));
    full.decisions.push_back(d);
    return d;
  };

  while (i < x.length() || !Q.empty()) {
    History<VertexItem> visible;
    visible.items = full.items;
    if (wrapped.model == ModelTag::model2) visible.decisions = full.decisions;
    if (wrapped.model == ModelTag::model1)
      visible.advice_prefix = tape->bits().substr(0, tape->cursor());
    PriorityFn<VertexItem> key = wrapped.make_priority(visible);

    // One pass over Q then R for the global maximum, collecting the tied
    // candidates in that same pass (R can hold 245 items per pending pair).
    std::optional<PriorityKey> best;
    std::vector<std::pair<std::string, std::pair<bool, std::size_t>>> tied;
    auto scan = [&](const std::vector<VertexItem>& set, bool from_r) {
      for (std::size_t idx = 0; idx < set.size(); ++idx) {
        PriorityKey k = key(set[idx]);
        if (best && k < *best) continue;
        if (!best || k > *best) {
          best = std::move(k);
          tied.clear();
        }
        tied.push_back({set[idx].id(), {from_r, idx}});
      }
    };
    scan(Q, false);
    if (i < x.length()) scan(R, true);
    std::sort(tied.begin(), tied.end());
    std::vector<std::string> ids;
    ids.reserve(tied.size());
    for (auto& [id, loc] : tied) ids.push_back(id);
    auto [from_r, idx] = tied[breaker.pick(ids)].second;

    if (from_r) {
      // Highest priority element is a first-item from R.
      VertexItem first = R[idx];
      std::size_t j = pair_of_name.at(first.vertex);
      GadgetSpec gadget = instantiate_vc_gadget_pair(pairs[j].names, first);
      Decision d = present(R, idx);
      char guess = d == Decision::accept ? '0' : '1';
      out.guesses.push_back(guess);
      char actual = x.bits[i];
      if (guess != actual) ++out.mistakes;
      const auto& variant =
          actual == '0' ? gadget.accept_items : gadget.reject_items;
      out.chosen_variants.push_back(actual == '0' ? 'a' : 'r');
      for (const auto& item : variant)
        if (item.vertex != first.vertex || item.neighbors != first.neighbors)
          Q.push_back(item);
      // Remove the whole pair universe from R.
      std::erase_if(R, [&](const VertexItem& it) {
        return pair_of_name.at(it.vertex) == j;
      });
      pairs[j].chosen = true;
      ++i;
    } else {
      present(Q, idx);
    }
  }
  out.instance_length = full.items.size();
  return out;
}

// A wrapped test algorithm: first items of a gadget are guessed by `guess`
// (sequence index -> accept/reject); later items follow the chain rule
// (accept on a rejected processed neighbor, else reject on an accepted one),
// which completes every gadget at cost OPT after a correct first decision
// and OPT+1 after a wrong one.
inline Algorithm<VertexItem> make_chain_guesser(
    std::function<Decision(std::size_t first_index)> guess) {
  Algorithm<VertexItem> alg;
  alg.model = ModelTag::model3;
  alg.decision_set = {Decision::accept, Decision::reject};
  alg.make_priority = [](const History<VertexItem>& h) -> PriorityFn<VertexItem> {
    auto processed = std::make_shared<std::set<int>>();
    for (const auto& item : h.items) processed->insert(item.vertex);
    return [processed](const VertexItem& item) -> PriorityKey {
      long long links = 0;
      for (int u : item.neighbors)
        if (processed->count(u)) ++links;
      return {links > 0 ? 1 : 0, -item.vertex};
    };
  };
  alg.decide = [guess](const VertexItem& item, const History<VertexItem>& h,
                       AdviceTape&) {
    bool rejected_nbr = false, accepted_nbr = false;
    for (std::size_t i = 0; i < h.items.size(); ++i) {
      for (int u : item.neighbors) {
        if (h.items[i].vertex != u) continue;
        (h.decisions[i] == Decision::accept ? accepted_nbr : rejected_nbr) = true;
      }
    }
    if (rejected_nbr) return Decision::accept;
    if (accepted_nbr) return Decision::reject;
    std::size_t firsts = 0;  // fresh items seen so far are gadget firsts
    std::set<int> seen;
    for (const auto& it : h.items) {
      bool fresh = true;
      for (int u : it.neighbors)
        if (seen.count(u)) fresh = false;
      if (seen.count(it.vertex)) fresh = false;
      if (fresh) ++firsts;
      seen.insert(it.vertex);
      for (int u : it.neighbors) seen.insert(u);
    }
    return guess(firsts);
  };
  return alg;
}

// ---- Thorny-path adversary ----

struct ThornyStrategy {
  std::string name;
  // Advice-free child choice given the presented triple and the count of
  // non-skip decisions made so far.
  std::function<Decision(const TripleItem&, int step)> choose;
};

inline std::vector<ThornyStrategy> baseline_thorny_strategies() {
  return {
      {"first-child", [](const TripleItem&, int) { return Decision::left; }},
      {"second-child", [](const TripleItem&, int) { return Decision::right; }},
      {"smaller-child",
       [](const TripleItem& t, int) {
         return t.v < t.w ? Decision::left : Decision::right;
       }},
      {"larger-child",
       [](const TripleItem& t, int) {
         return t.v > t.w ? Decision::left : Decision::right;
       }},
      {"alternate-01",
       [](const TripleItem&, int step) {
         return step % 2 == 0 ? Decision::left : Decision::right;
       }},
      {"alternate-10",
       [](const TripleItem&, int step) {
         return step % 2 == 0 ? Decision::right : Decision::left;
       }},
      {"parent-parity",
       [](const TripleItem& t, int) {
         return t.u % 2 == 0 ? Decision::left : Decision::right;
       }},
      {"child-sum-parity",
       [](const TripleItem& t, int) {
         return (t.v + t.w) % 2 == 0 ? Decision::left : Decision::right;
       }},
  };
}

struct FoolingReport {
  ThornyInstance instance;
  std::vector<bool> fooled;      // per strategy, from replay on the instance
  std::set<long long> labels_used;  // non-start labels in the instance
};

namespace detail {

// All canonical triples (children sorted) over `free`, plus the triples
// whose first coordinate is the frontier.
inline std::vector<TripleItem> extension_items(const std::set<long long>& free,
                                               long long frontier) {
  std::vector<long long> f(free.begin(), free.end());
  std::vector<TripleItem> items;
  for (long long u : f)
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        if (f[a] != u && f[b] != u) items.push_back({u, f[a], f[b]});
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b)
      items.push_back({frontier, f[a], f[b]});
  return items;
}

// Does this strategy walk the full spine of `inst` when replayed on it?
inline bool deviates_from_spine(const ThornyStrategy& strategy,
                                const ThornyInstance& inst) {
  Algorithm<TripleItem> alg = make_thorny_algorithm(inst.start, strategy.choose);
  AdviceTape tape{""};
  Trace trace =
      run_priority_algorithm(alg, inst.triples, tape, TieBreakPolicy::min_id());
  long long frontier = inst.start;
  std::size_t followed = 0;
  for (const auto& step : trace.steps) {
    if (step.decision == Decision::skip) continue;
    for (const auto& t : inst.triples) {
      if (t.id() != step.item_id) continue;
      frontier = step.decision == Decision::left ? t.v : t.w;
      ++followed;
      break;
    }
  }
  return followed != static_cast<std::size_t>(inst.k) ||
         frontier != inst.spine.back();
}

}  // namespace detail

// Iteratively builds one thorny-path instance on which every given strategy
// deviates from the spine. The label pool has 4 * (number of strategies)
// labels; fresh bridge labels are drawn from the top of the pool.
inline FoolingReport thorny_fool(const std::vector<ThornyStrategy>& strategies,
                                 int pool_size = -1) {
  const auto ell = static_cast<int>(strategies.size());
  if (pool_size < 0) pool_size = 4 * ell;
  std::set<long long> free;
  for (int i = 0; i < pool_size; ++i) free.insert(2 + i);

  ThornyInstance inst;
  inst.k = 0;
  inst.spine = {inst.start};
  long long frontier = inst.start;

  for (const ThornyStrategy& strategy : strategies) {
    std::vector<TripleItem> items = detail::extension_items(free, frontier);
    items.insert(items.end(), inst.triples.begin(), inst.triples.end());

    // Run the black box over the invalid combined input until it first
    // requests an extension item.
    Algorithm<TripleItem> alg = make_thorny_algorithm(inst.start, strategy.choose);
    AdviceTape tape{""};
    TieBreaker breaker(TieBreakPolicy::min_id());
    History<TripleItem> full;
    std::set<std::string> instance_ids;
    for (const auto& t : inst.triples) instance_ids.insert(t.id());

    bool mistake_already = false;
    std::optional<TripleItem> requested;
    std::optional<Decision> requested_decision;
    std::vector<TripleItem> remaining = items;
    while (!remaining.empty()) {
      History<TripleItem> visible;
      visible.items = full.items;
      visible.decisions = full.decisions;
      PriorityFn<TripleItem> key = alg.make_priority(visible);
      std::size_t idx = select_next_index(remaining, key, breaker);
      TripleItem item = remaining[idx];
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
      Decision d = alg.decide(item, full, tape);
      full.items.push_back(item);
      full.decisions.push_back(d);
      if (instance_ids.count(item.id())) {
        // Mistake on an existing spine triple?
        for (std::size_t s = 0; s < inst.triples.size(); ++s) {
          if (inst.triples[s] != item) continue;
          Decision spine_dir =
              inst.spine_bits[s] == '0' ? Decision::left : Decision::right;
          if (d != spine_dir) mistake_already = true;
        }
        continue;
      }
      requested = item;
      requested_decision = d;
      break;
    }

    if (mistake_already || !requested) continue;  // instance already fools it

    TripleItem t = *requested;
    Decision d = *requested_decision;
    if (t.u != frontier) {
      // Bridge from the frontier to t.u with a fresh thorn label.
      auto it = free.rbegin();
      while (it != free.rend() && (*it == t.u || *it == t.v || *it == t.w)) ++it;
      long long bridge = *it;
      inst.triples.push_back({frontier, std::min(t.u, bridge),
                              std::max(t.u, bridge)});
      inst.spine_bits.push_back(t.u < bridge ? '0' : '1');
      inst.spine.push_back(t.u);
      ++inst.k;
      free.erase(bridge);
      free.erase(t.u);
    }
    // The strategy committed to one child (or to none); send the spine the
    // other way so the commitment is a mistake under every extension.
    long long next = d == Decision::left ? t.w : t.v;
    inst.triples.push_back(t);
    inst.spine_bits.push_back(next == t.v ? '0' : '1');
    inst.spine.push_back(next);
    ++inst.k;
    free.erase(t.u);
    free.erase(t.v);
    free.erase(t.w);
    frontier = next;
  }

  // A fooling instance needs at least one triple; if every strategy stalled
  // before requesting anything (cannot happen for total strategies), k = 0.
  FoolingReport report;
  report.instance = inst;
  for (const ThornyStrategy& strategy : strategies)
    report.fooled.push_back(detail::deviates_from_spine(strategy, report.instance));
  for (const auto& t : inst.triples) {
    for (long long v : {t.u, t.v, t.w})
      if (v != inst.start) report.labels_used.insert(v);
  }
  return report;
}

}  // namespace padv

#endif  // PADV_LOWER_BOUNDS_HPP
