#ifndef PADV_FRAMEWORK_HPP
#define PADV_FRAMEWORK_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

// Generic execution engine for adaptive priority algorithms with advice.
//
// An algorithm is a pair of callbacks: a priority-function factory invoked
// once per step (receiving only the history fields its model permits) and a
// decision callback. The engine presents items one at a time, each maximizing
// the current priority key among unprocessed items, and records a Trace.

namespace padv {

enum class Decision { accept, reject, left, right, skip };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::accept: return "accept";
    case Decision::reject: return "reject";
    case Decision::left: return "left";
    case Decision::right: return "right";
    case Decision::skip: return "skip";
  }
  return "?";
}

// Visibility contract for the adaptive priority function.
//   model1: items seen so far + advice prefix read so far
//   model2: items seen so far + decisions made so far
//   model3: items seen so far only
enum class ModelTag { model1, model2, model3 };

struct TapeExhaustedError : std::runtime_error {
  TapeExhaustedError() : std::runtime_error("advice tape exhausted") {}
};

struct ContractViolationError : std::runtime_error {
  explicit ContractViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Advice tape with a monotone read cursor. Two explicit modes:
//  - generating: an oracle supplies bits as the algorithm asks for them;
//    the tape grows and records what was written.
//  - replay: the bit string is fixed up front; reading past the end is a
//    TapeExhaustedError (an advice-budget overrun, not an algorithm bug).
class AdviceTape {
 public:
  enum class Mode { generating, replay };

  AdviceTape() : mode_(Mode::generating) {}
  explicit AdviceTape(std::string bits)
      : bits_(std::move(bits)), mode_(Mode::replay) {}

  Mode mode() const { return mode_; }
  const std::string& bits() const { return bits_; }
  std::size_t cursor() const { return cursor_; }

  // Replay-mode read of `count` bits.
  std::string read(std::size_t count) {
    if (mode_ != Mode::replay)
      throw ContractViolationError("read() without a supplier on a generating tape");
    if (cursor_ + count > bits_.size()) throw TapeExhaustedError();
    std::string out = bits_.substr(cursor_, count);
    cursor_ += count;
    return out;
  }

  // Read `count` bits, letting `supply` produce them in generating mode.
  std::string read(std::size_t count, const std::function<char()>& supply) {
    if (mode_ == Mode::replay) return read(count);
    for (std::size_t i = 0; i < count; ++i) {
      char b = supply();
      if (b != '0' && b != '1')
        throw ContractViolationError("advice supplier produced a non-bit");
      bits_.push_back(b);
    }
    std::string out = bits_.substr(cursor_, count);
    cursor_ += count;
    return out;
  }

 private:
  std::string bits_;
  std::size_t cursor_ = 0;
  Mode mode_;
};

// Priority keys are exact integer tuples compared lexicographically; a
// greater tuple means higher priority. Floating point is never used so that
// ties are detected exactly (tie-breaking is semantically load-bearing).
using PriorityKey = std::vector<long long>;

// What an algorithm has seen so far. The engine blanks the fields that the
// declared model does not permit the priority function to inspect.
template <typename Item>
struct History {
  std::vector<Item> items;
  std::vector<Decision> decisions;  // empty unless model 2
  std::string advice_prefix;        // empty unless model 1
};

template <typename Item>
using PriorityFn = std::function<PriorityKey(const Item&)>;

template <typename Item>
struct Algorithm {
  ModelTag model = ModelTag::model2;
  // Invoked once per step with the model-visible history; returns the
  // priority function P_i to rank the remaining items.
  std::function<PriorityFn<Item>(const History<Item>&)> make_priority;
  // Decision for the presented item; may read advice from the tape. The
  // history passed here contains all prior items and decisions (decisions
  // are always a function of input seen and advice read).
  std::function<Decision(const Item&, const History<Item>&, AdviceTape&)> decide;
  // The problem's decision universe; anything else is a contract violation.
  std::vector<Decision> decision_set = {Decision::accept, Decision::reject};
};

// Tie-break among items of equal maximal priority.
struct TieBreakPolicy {
  enum class Kind { min_id, max_id, seeded_random, adversarial };
  Kind kind = Kind::min_id;
  std::uint64_t seed = 0;
  // adversarial: given the candidate ids (ascending), pick an index.
  std::function<std::size_t(const std::vector<std::string>&)> choose;

  static TieBreakPolicy min_id() { return {}; }
  static TieBreakPolicy max_id() { return {Kind::max_id, 0, nullptr}; }
  static TieBreakPolicy seeded_random(std::uint64_t seed) {
    return {Kind::seeded_random, seed, nullptr};
  }
  static TieBreakPolicy adversarial(
      std::function<std::size_t(const std::vector<std::string>&)> choose) {
    return {Kind::adversarial, 0, std::move(choose)};
  }
};

struct TraceStep {
  std::string item_id;
  Decision decision;
  std::size_t bits_read = 0;
};

struct Trace {
  std::vector<TraceStep> steps;
  std::size_t total_bits = 0;
};

// Stateful tie-breaker owned by a single run (the seeded-random policy keeps
// its own RNG stream so runs are deterministic given the seed).
class TieBreaker {
 public:
  explicit TieBreaker(TieBreakPolicy policy)
      : policy_(std::move(policy)), rng_(policy_.seed) {}

  // `ids` must be the candidate ids in ascending order.
  std::size_t pick(const std::vector<std::string>& ids) {
    switch (policy_.kind) {
      case TieBreakPolicy::Kind::min_id: return 0;
      case TieBreakPolicy::Kind::max_id: return ids.size() - 1;
      case TieBreakPolicy::Kind::seeded_random: {
        std::uniform_int_distribution<std::size_t> d(0, ids.size() - 1);
        return d(rng_);
      }
      case TieBreakPolicy::Kind::adversarial: {
        std::size_t i = policy_.choose(ids);
        if (i >= ids.size())
          throw ContractViolationError("adversarial tie-break out of range");
        return i;
      }
    }
    return 0;
  }

 private:
  TieBreakPolicy policy_;
  std::mt19937_64 rng_;
};

// Index of the item maximizing `key`, with ties resolved by `breaker`.
// Items need an `id()` accessor returning a totally ordered string.
template <typename Item>
std::size_t select_next_index(const std::vector<Item>& remaining,
                              const PriorityFn<Item>& key, TieBreaker& breaker) {
  if (remaining.empty())
    throw std::invalid_argument("select_next_item: no items");
  std::optional<PriorityKey> best;
  for (const Item& it : remaining) {
    PriorityKey k = key(it);
    if (!best || k > *best) best = std::move(k);
  }
  // Gather ids of all maximizers, ascending.
  std::vector<std::pair<std::string, std::size_t>> tied;
  for (std::size_t i = 0; i < remaining.size(); ++i)
    if (key(remaining[i]) == *best) tied.push_back({remaining[i].id(), i});
  std::sort(tied.begin(), tied.end());
  std::vector<std::string> ids;
  ids.reserve(tied.size());
  for (auto& [id, idx] : tied) ids.push_back(id);
  return tied[breaker.pick(ids)].second;
}

template <typename Item>
const Item& select_next_item(const std::vector<Item>& remaining,
                             const PriorityFn<Item>& key,
                             const TieBreakPolicy& policy) {
  TieBreaker breaker(policy);
  return remaining[select_next_index(remaining, key, breaker)];
}

// The main loop: present items one at a time, each maximizing the current
// priority function among unprocessed items, and record one decision per
// item. Trace.total_bits equals the tape's cursor advance.
template <typename Item>
Trace run_priority_algorithm(const Algorithm<Item>& alg,
                             std::vector<Item> remaining, AdviceTape& tape,
                             const TieBreakPolicy& policy) {
  Trace trace;
  TieBreaker breaker(policy);
  History<Item> full;  // everything, regardless of model
  while (!remaining.empty()) {
    History<Item> visible;
    visible.items = full.items;
    if (alg.model == ModelTag::model2) visible.decisions = full.decisions;
    if (alg.model == ModelTag::model1)
      visible.advice_prefix = tape.bits().substr(0, tape.cursor());
    PriorityFn<Item> key = alg.make_priority(visible);
    std::size_t idx = select_next_index(remaining, key, breaker);
    Item item = std::move(remaining[idx]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));

    std::size_t before = tape.cursor();
    Decision d = alg.decide(item, full, tape);
    if (std::find(alg.decision_set.begin(), alg.decision_set.end(), d) ==
        alg.decision_set.end())
      throw ContractViolationError("decision outside the problem's decision set");
    trace.steps.push_back({item.id(), d, tape.cursor() - before});
    trace.total_bits += tape.cursor() - before;
    full.items.push_back(std::move(item));
    full.decisions.push_back(d);
  }
  return trace;
}

}  // namespace padv

#endif  // PADV_FRAMEWORK_HPP
