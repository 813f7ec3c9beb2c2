// Command-line front end: generators, solvers, verifiers, bound calculators,
// and the adversary/reduction harnesses, with key=value output (or a JSON
// mirror via --json). Exit codes: 0 success, 1 verification failure, 2 usage
// or parse error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "padv/enumerate.hpp"
#include "padv/framework.hpp"
#include "padv/graph.hpp"
#include "padv/lower_bounds.hpp"
#include "padv/oracle.hpp"
#include "padv/thorny.hpp"
#include "padv/vc_solver.hpp"

namespace {

using nlohmann::json;

// Ordered key=value report with a JSON mirror holding identical values.
struct Report {
  std::vector<std::pair<std::string, json>> entries;

  void add(const std::string& key, json value) {
    entries.push_back({key, std::move(value)});
  }

  void print(bool as_json) const {
    if (as_json) {
      json obj = json::object();
      for (const auto& [k, v] : entries) obj[k] = v;
      std::cout << obj.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : entries) {
      if (v.is_string()) std::cout << k << '=' << v.get<std::string>() << '\n';
      else std::cout << k << '=' << v.dump() << '\n';
    }
  }
};

padv::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw padv::ParseError(0, "cannot open " + path);
  return padv::read_graph(in);
}

padv::TieBreakPolicy parse_tiebreak(const std::string& spec) {
  if (spec == "min") return padv::TieBreakPolicy::min_id();
  if (spec == "max") return padv::TieBreakPolicy::max_id();
  if (spec.rfind("random:", 0) == 0)
    return padv::TieBreakPolicy::seeded_random(
        std::stoull(spec.substr(std::string("random:").size())));
  throw CLI::ValidationError("--tiebreak",
                             "expected min, max, or random:<seed>");
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << xs[i];
  }
  return out.str();
}

int thread_count() {
  const char* env = std::getenv("PRIORITY_ADVICE_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

// ---- verify: the per-instance assertion bundle ----

struct VerifyOutcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::size_t advice_bits = 0;
};

VerifyOutcome verify_one(const padv::Graph& g, const std::string& label,
                         const padv::TieBreakPolicy& tiebreak) {
  VerifyOutcome out;
  auto fail = [&](const std::string& what) {
    out.pass = false;
    out.failures.push_back(label + ": " + what);
  };
  padv::SolveResult r = padv::solve_with_oracle(g, tiebreak);
  out.advice_bits = r.trace.total_bits;

  std::set<int> in(r.cover.begin(), r.cover.end());
  for (auto [u, v] : g.edges())
    if (!in.count(u) && !in.count(v)) {
      fail("produced set misses edge " + std::to_string(u) + "-" +
           std::to_string(v));
      break;
    }

  auto opt = padv::min_vertex_cover_size(g, {});
  if (!opt || static_cast<int>(r.cover.size()) != *opt)
    fail("cover size " + std::to_string(r.cover.size()) + " != optimum " +
         std::to_string(opt.value_or(-1)));

  if (!padv::check_advice_budget(g.size(), r.trace.total_bits))
    fail("advice bits " + std::to_string(r.trace.total_bits) +
         " exceed floor(15n/46)");

  padv::ComponentAudit audit = padv::audit_components(r.trace, g);
  for (const auto& comp : audit.components) {
    int k = comp.advice_count();
    if (k >= 1 && comp.size() < 3 * k + 1)
      fail("component with " + std::to_string(k) + " advised vertices has " +
           std::to_string(comp.size()) + " < " + std::to_string(3 * k + 1) +
           " members");
    if (k == 4 && comp.k3 != 0) fail("4-advice component with k3 != 0");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive priority algorithms with advice: solver toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as a JSON object");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind, gen_out;
  int gen_n = 8, gen_k = 4, gen_nprime = 2, gen_which = 1;
  unsigned long long gen_rmask = 0;
  double gen_density = 0.7;
  std::uint64_t gen_seed = 0;
  bool gen_has_seed = false;
  gen->add_option("kind", gen_kind,
                  "random | gadget | onlinelb | thorny")->required();
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");
  gen->add_option("--n", gen_n, "vertex count (random)");
  gen->add_option("--density", gen_density, "edge density target (random)");
  auto* seed_opt = gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--which", gen_which, "gadget variant 1 or 2");
  gen->add_option("--k", gen_k, "triple count (thorny)");
  gen->add_option("--nprime", gen_nprime, "block parameter (onlinelb)");
  gen->add_option("--rmask", gen_rmask,
                  "bitmask selecting R over blocks 0..2*nprime-1 (onlinelb)");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "solve one graph file");
  std::string solve_file, solve_mode = "oracle", solve_tb = "min";
  solve->add_option("graph", solve_file, "graph file")->required();
  solve->add_option("--mode", solve_mode, "oracle | enumerate | bruteforce");
  solve->add_option("--tiebreak", solve_tb, "min | max | random:<seed>");

  // ---- advise ----
  auto* advise = app.add_subcommand("advise", "emit the oracle advice string");
  std::string advise_file, advise_tb = "min";
  advise->add_option("graph", advise_file, "graph file")->required();
  advise->add_option("--tiebreak", advise_tb, "min | max | random:<seed>");

  // ---- replay ----
  auto* replay = app.add_subcommand("replay", "replay a fixed advice string");
  std::string replay_file, replay_bits, replay_tb = "min";
  replay->add_option("graph", replay_file, "graph file")->required();
  replay->add_option("advice", replay_bits,
                     "advice bits, or @file to read them")->required();
  replay->add_option("--tiebreak", replay_tb, "min | max | random:<seed>");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "assert solver properties");
  std::string verify_file, verify_tb = "min";
  std::vector<std::string> verify_random;
  verify->add_option("graph", verify_file, "graph file");
  verify->add_option("--random", verify_random,
                     "n count seed: verify seeded random instances")
      ->expected(3);
  verify->add_option("--tiebreak", verify_tb, "min | max | random:<seed>");

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "advice/ratio bound calculator");
  bool table1 = false;
  double eps = 0.25;
  std::vector<std::string> spec_args;
  bounds->add_flag("--table1", table1, "all six built-in problem rows");
  bounds->add_option("--spec", spec_args,
                     "opt_a opt_r bad_a bad_r s kind(min|max)")->expected(6);
  bounds->add_option("--eps", eps, "mistake fraction in (0, 1/2]");

  // ---- adversary ----
  auto* adversary = app.add_subcommand("adversary", "lower-bound harnesses");
  std::string thorny_spec, adv_out;
  std::vector<std::string> reduce_args;
  adversary->add_option("--thorny", thorny_spec,
                        "baseline8 or comma-separated strategy names");
  adversary->add_option("--reduce", reduce_args,
                        "guesser n: run the string-guessing reduction "
                        "(perfect | always-wrong | random:<seed> | "
                        "wrong-first:<w>)")
      ->expected(2);
  adversary->add_option("-o,--out", adv_out, "instance output file (thorny)");

  // Let the app-level --json appear after a subcommand name.
  for (auto* sub : {gen, solve, advise, replay, verify, bounds, adversary})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  gen_has_seed = seed_opt->count() > 0;

  Report report;
  try {
    if (gen->parsed()) {
      std::ostringstream buf;
      if (gen_kind == "random") {
        if (!gen_has_seed) throw CLI::ValidationError("--seed", "required");
        padv::write_graph(padv::random_max3(gen_n, gen_density, gen_seed), buf);
      } else if (gen_kind == "gadget") {
        if (gen_which != 1 && gen_which != 2)
          throw CLI::ValidationError("--which", "must be 1 or 2");
        padv::write_graph(padv::gadget_graph(gen_which == 1
                                                 ? padv::GadgetVariant::one
                                                 : padv::GadgetVariant::two),
                          buf);
      } else if (gen_kind == "onlinelb") {
        padv::OnlineLBParams params;
        params.n_prime = gen_nprime;
        params.seed = gen_seed;
        for (int b = 0; b < 2 * gen_nprime; ++b)
          if (gen_rmask >> b & 1) params.R.push_back(b);
        padv::write_graph(padv::online_lb_graph(params), buf);
      } else if (gen_kind == "thorny") {
        if (!gen_has_seed) throw CLI::ValidationError("--seed", "required");
        padv::write_thorny(padv::gen_thorny(gen_k, gen_seed), buf);
      } else {
        throw CLI::ValidationError("kind", "unknown generator " + gen_kind);
      }
      if (gen_out.empty()) {
        std::cout << buf.str();
      } else {
        std::ofstream out(gen_out);
        out << buf.str();
        report.add("written", gen_out);
        report.print(as_json);
      }
    } else if (solve->parsed()) {
      padv::Graph g = load_graph(solve_file);
      padv::TieBreakPolicy tb = parse_tiebreak(solve_tb);
      if (solve_mode == "oracle") {
        padv::SolveResult r = padv::solve_with_oracle(g, tb);
        report.add("cover_size", r.cover.size());
        report.add("cover", join_ints(r.cover));
        report.add("advice_bits", r.trace.total_bits);
        report.add("advice", r.advice);
      } else if (solve_mode == "enumerate") {
        padv::EnumerationReport r = padv::exact_mvc_by_enumeration(g, tb);
        report.add("cover_size", r.best_size);
        report.add("cover", join_ints(r.best_cover));
        report.add("leaves_explored", r.leaves_explored);
      } else if (solve_mode == "bruteforce") {
        auto r = padv::min_vertex_cover(g, {});
        if (!r) throw padv::GraphError("infeasible");
        report.add("cover_size", r->size);
        report.add("cover", join_ints(r->witness));
      } else {
        throw CLI::ValidationError("--mode", "unknown mode " + solve_mode);
      }
      report.print(as_json);
    } else if (advise->parsed()) {
      padv::Graph g = load_graph(advise_file);
      padv::SolveResult r =
          padv::solve_with_oracle(g, parse_tiebreak(advise_tb));
      if (as_json) {
        report.add("advice", r.advice);
        report.print(true);
      } else {
        std::cout << r.advice << '\n';
      }
    } else if (replay->parsed()) {
      padv::Graph g = load_graph(replay_file);
      std::string bits = replay_bits;
      if (!bits.empty() && bits[0] == '@') {
        std::ifstream in(bits.substr(1));
        if (!in) throw padv::ParseError(0, "cannot open " + bits.substr(1));
        std::getline(in, bits);
      }
      padv::ReplayOutcome r =
          padv::replay_with_advice(g, bits, parse_tiebreak(replay_tb));
      report.add("valid", r.valid ? 1 : 0);
      report.add("exhausted", r.exhausted ? 1 : 0);
      report.add("cover_size", r.cover.size());
      report.add("cover", join_ints(r.cover));
      report.add("advice_bits", r.trace.total_bits);
      report.print(as_json);
      return r.valid ? 0 : 1;
    } else if (verify->parsed()) {
      padv::TieBreakPolicy tb = parse_tiebreak(verify_tb);
      std::vector<std::pair<std::string, padv::Graph>> instances;
      if (!verify_file.empty())
        instances.push_back({verify_file, load_graph(verify_file)});
      if (!verify_random.empty()) {
        int n = std::stoi(verify_random[0]);
        int count = std::stoi(verify_random[1]);
        std::uint64_t seed = std::stoull(verify_random[2]);
        for (int i = 0; i < count; ++i)
          instances.push_back({"random[" + std::to_string(i) + "]",
                               padv::random_max3(n, 0.7, seed + static_cast<std::uint64_t>(i))});
      }
      if (instances.empty())
        throw CLI::ValidationError("verify", "need a graph file or --random");

      std::atomic<std::size_t> next{0};
      std::atomic<long long> passes{0};
      std::size_t max_bits = 0;
      std::vector<std::string> failures;
      std::mutex mu;
      auto worker = [&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= instances.size()) return;
          VerifyOutcome out =
              verify_one(instances[i].second, instances[i].first, tb);
          std::lock_guard<std::mutex> lock(mu);
          if (out.pass) ++passes;
          max_bits = std::max(max_bits, out.advice_bits);
          failures.insert(failures.end(), out.failures.begin(),
                          out.failures.end());
        }
      };
      int workers = std::min<int>(thread_count(),
                                  static_cast<int>(instances.size()));
      std::vector<std::thread> pool;
      for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      std::sort(failures.begin(), failures.end());

      report.add("pass", passes.load());
      report.add("fail", static_cast<long long>(instances.size()) - passes);
      report.add("advice_bits", max_bits);
      for (std::size_t i = 0; i < failures.size(); ++i)
        report.add("failure" + std::to_string(i), failures[i]);
      report.print(as_json);
      return failures.empty() ? 0 : 1;
    } else if (bounds->parsed()) {
      std::vector<padv::BoundTableRow> rows;
      if (table1) {
        rows = padv::bound_table();
      } else if (!spec_args.empty()) {
        padv::RatioSpec spec;
        spec.opt_a = std::stod(spec_args[0]);
        spec.opt_r = std::stod(spec_args[1]);
        spec.bad_a = std::stod(spec_args[2]);
        spec.bad_r = std::stod(spec_args[3]);
        if (spec_args[5] == "min") spec.kind = padv::ProblemKind::minimization;
        else if (spec_args[5] == "max") spec.kind = padv::ProblemKind::maximization;
        else throw CLI::ValidationError("--spec", "kind must be min or max");
        rows.push_back({"custom", spec, std::stoi(spec_args[4])});
      } else {
        throw CLI::ValidationError("bounds", "need --table1 or --spec");
      }
      json lines = json::array();
      for (const auto& row : rows) {
        // Threshold reported per input item (n = 1): (1 - H(eps)) / s.
        double threshold = padv::advice_threshold(eps, 1, row.s);
        double ratio = padv::ratio_bound(row.spec, eps);
        std::ostringstream line;
        line.precision(15);
        line << row.problem << " s=" << row.s << " eps=" << eps
             << " advice_threshold=" << threshold << " ratio=" << ratio;
        if (as_json) {
          lines.push_back({{"problem", row.problem},
                           {"s", row.s},
                           {"eps", eps},
                           {"advice_threshold", threshold},
                           {"ratio", ratio}});
        } else {
          std::cout << line.str() << '\n';
        }
      }
      if (as_json) std::cout << lines.dump(2) << '\n';
    } else if (adversary->parsed()) {
      if (!reduce_args.empty()) {
        const std::string& guesser = reduce_args[0];
        int n = std::stoi(reduce_args[1]);
        std::string x;
        std::mt19937_64 rng(12345);
        for (int i = 0; i < n; ++i) x.push_back(rng() % 2 ? '1' : '0');
        std::function<padv::Decision(std::size_t)> guess;
        if (guesser == "perfect") {
          guess = [x](std::size_t i) {
            return x[i] == '0' ? padv::Decision::accept : padv::Decision::reject;
          };
        } else if (guesser == "always-wrong") {
          guess = [x](std::size_t i) {
            return x[i] == '0' ? padv::Decision::reject : padv::Decision::accept;
          };
        } else if (guesser.rfind("random:", 0) == 0) {
          auto grng = std::make_shared<std::mt19937_64>(
              std::stoull(guesser.substr(std::string("random:").size())));
          guess = [grng](std::size_t) {
            return (*grng)() % 2 ? padv::Decision::reject
                                 : padv::Decision::accept;
          };
        } else if (guesser.rfind("wrong-first:", 0) == 0) {
          std::size_t w =
              std::stoull(guesser.substr(std::string("wrong-first:").size()));
          guess = [x, w](std::size_t i) {
            bool right = i >= w;
            return (x[i] == '0') == right ? padv::Decision::accept
                                          : padv::Decision::reject;
          };
        } else {
          throw CLI::ValidationError("--reduce", "unknown guesser " + guesser);
        }
        padv::ReductionTrace r = padv::run_sgkh_reduction(
            padv::make_chain_guesser(guess), {x});
        report.add("alg_value", r.alg_value);
        report.add("opt_value", r.opt_value);
        report.add("mistakes", r.mistakes);
        report.add("instance_length", r.instance_length);
        report.add("ratio", static_cast<double>(r.alg_value) /
                                static_cast<double>(r.opt_value));
        report.print(as_json);
      } else if (!thorny_spec.empty()) {
        std::vector<padv::ThornyStrategy> all =
            padv::baseline_thorny_strategies();
        std::vector<padv::ThornyStrategy> chosen;
        if (thorny_spec == "baseline8") {
          chosen = all;
        } else {
          std::stringstream ss(thorny_spec);
          std::string name;
          while (std::getline(ss, name, ',')) {
            auto it = std::find_if(all.begin(), all.end(),
                                   [&](const auto& s) { return s.name == name; });
            if (it == all.end())
              throw CLI::ValidationError("--thorny", "unknown strategy " + name);
            chosen.push_back(*it);
          }
        }
        padv::FoolingReport r = padv::thorny_fool(chosen);
        if (!adv_out.empty()) {
          std::ofstream out(adv_out);
          padv::write_thorny(r.instance, out);
          report.add("instance_file", adv_out);
        }
        int fooled = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          report.add(chosen[i].name, r.fooled[i] ? "fail" : "pass");
          if (r.fooled[i]) ++fooled;
        }
        report.add("fooled", std::to_string(fooled) + "/" +
                                 std::to_string(chosen.size()));
        report.add("labels_used", r.labels_used.size());
        report.add("k", r.instance.k);
        report.print(as_json);
      } else {
        throw CLI::ValidationError("adversary", "need --thorny or --reduce");
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const padv::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const padv::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
