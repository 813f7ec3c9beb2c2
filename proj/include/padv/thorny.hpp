#ifndef PADV_THORNY_HPP
#define PADV_THORNY_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padv/framework.hpp"
#include "padv/graph.hpp"

// The thorny path problem: a layered graph where every non-first layer has
// two vertices, one continuing the spine and one a dead-end thorn. Items are
// triples (u, v, w): u in some layer with children v and w. Decisions are
// left (edge u-v), right (edge u-w), or skip.

namespace padv {

struct TripleItem {
  long long u = 0, v = 0, w = 0;

  std::string id() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%012lld:%012lld:%012lld", u, v, w);
    return buf;
  }
  bool operator==(const TripleItem&) const = default;
};

struct ThornyInstance {
  int k = 0;             // number of triples = layers - 1
  long long start = 1;
  std::vector<TripleItem> triples;
  std::vector<long long> spine;  // generator ground truth: start, then k spine children
  std::string spine_bits;        // bit i: which child of triple i continues the spine
};

// Seed-driven instance: the start vertex is labeled 1 and every other label
// is drawn injectively from a shuffled pool.
inline ThornyInstance gen_thorny(int k, std::uint64_t seed) {
  if (k < 1) throw GraphError("k must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<long long> pool(static_cast<std::size_t>(2 * k + 8));
  std::iota(pool.begin(), pool.end(), 2LL);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t next = 0;

  ThornyInstance inst;
  inst.k = k;
  inst.spine.push_back(inst.start);
  long long frontier = inst.start;
  for (int i = 0; i < k; ++i) {
    long long a = pool[next++], b = pool[next++];
    inst.triples.push_back({frontier, a, b});
    char bit = static_cast<char>('0' + (rng() & 1));
    inst.spine_bits.push_back(bit);
    frontier = bit == '0' ? a : b;
    inst.spine.push_back(frontier);
  }
  return inst;
}

// Format: line 1 "k s"; one "u v w" triple per line. '#' comments ignored.
inline void write_thorny(const ThornyInstance& inst, std::ostream& out) {
  out << inst.k << ' ' << inst.start << '\n';
  for (const auto& t : inst.triples)
    out << t.u << ' ' << t.v << ' ' << t.w << '\n';
}

inline ThornyInstance read_thorny(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(lineno, "missing header");
  ThornyInstance inst;
  {
    std::istringstream ss(line);
    if (!(ss >> inst.k >> inst.start))
      throw ParseError(lineno, "expected header 'k s'");
  }
  while (next_line()) {
    std::istringstream ss(line);
    TripleItem t;
    if (!(ss >> t.u >> t.v >> t.w))
      throw ParseError(lineno, "expected triple 'u v w'");
    inst.triples.push_back(t);
  }
  return inst;
}

// ---- Solving with advice ----
// Starting from s, each advice bit picks which child to follow; adaptivity
// re-sorts the items so the followed child's triple comes next.

namespace detail {

// Frontier after applying the followed decisions in `h`, starting at s.
inline long long thorny_frontier(long long start, const History<TripleItem>& h) {
  long long frontier = start;
  for (std::size_t i = 0; i < h.items.size(); ++i) {
    if (h.items[i].u != frontier) continue;
    if (h.decisions[i] == Decision::left) frontier = h.items[i].v;
    else if (h.decisions[i] == Decision::right) frontier = h.items[i].w;
  }
  return frontier;
}

}  // namespace detail

// The frontier-first priority shared by the advice solver and the baseline
// strategies: the triple extending the current path end outranks the rest.
inline Algorithm<TripleItem> make_thorny_algorithm(
    long long start,
    std::function<Decision(const TripleItem&, int step)> choose_child) {
  Algorithm<TripleItem> alg;
  alg.model = ModelTag::model2;
  alg.decision_set = {Decision::left, Decision::right, Decision::skip};
  alg.make_priority = [start](const History<TripleItem>& h) -> PriorityFn<TripleItem> {
    long long frontier = detail::thorny_frontier(start, h);
    return [frontier](const TripleItem& t) -> PriorityKey {
      return {t.u == frontier ? 1 : 0};
    };
  };
  alg.decide = [start, choose_child](const TripleItem& t,
                                     const History<TripleItem>& h, AdviceTape&) {
    if (t.u != detail::thorny_frontier(start, h)) return Decision::skip;
    int step = 0;
    for (std::size_t i = 0; i < h.items.size(); ++i)
      if (h.decisions[i] != Decision::skip) ++step;
    return choose_child(t, step);
  };
  return alg;
}

struct ThornySolveResult {
  bool valid = false;            // reached a last-layer leaf
  bool exhausted = false;
  std::vector<long long> path;   // visited vertices, starting at s
  std::size_t bits_read = 0;
  Trace trace;
};

inline ThornySolveResult thorny_solve(const ThornyInstance& inst, AdviceTape& tape) {
  Algorithm<TripleItem> alg = make_thorny_algorithm(
      inst.start, [&tape](const TripleItem&, int) {
        return tape.read(1)[0] == '1' ? Decision::right : Decision::left;
      });
  ThornySolveResult out;
  out.path.push_back(inst.start);
  try {
    out.trace = run_priority_algorithm(alg, inst.triples, tape,
                                       TieBreakPolicy::min_id());
  } catch (const TapeExhaustedError&) {
    out.exhausted = true;
    return out;
  }
  out.bits_read = out.trace.total_bits;
  // Recover the walked path from the decisions.
  long long frontier = inst.start;
  std::size_t followed = 0;
  for (std::size_t i = 0; i < out.trace.steps.size(); ++i) {
    const auto& step = out.trace.steps[i];
    if (step.decision == Decision::skip) continue;
    // Items are presented frontier-first, so this triple starts at frontier.
    for (const auto& t : inst.triples) {
      if (t.id() != step.item_id) continue;
      frontier = step.decision == Decision::left ? t.v : t.w;
      out.path.push_back(frontier);
      ++followed;
      break;
    }
  }
  out.valid = followed == static_cast<std::size_t>(inst.k);
  return out;
}

}  // namespace padv

#endif  // PADV_THORNY_HPP
