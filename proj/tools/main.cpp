#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "relocation/analysis.hpp"
#include "relocation/dot.hpp"
#include "relocation/generator.hpp"
#include "relocation/heuristic.hpp"
#include "relocation/io.hpp"
#include "relocation/solver.hpp"

namespace {

using namespace relo;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<TransportRequest> matching_requests(const Instance& inst) {
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  if (tasks.empty()) return {};
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  const MatchingSolution sol = min_cost_perfect_p_matching(bi);
  return matching_to_requests(bi, sol);
}

/// Pairs the i-th pickup unit with the i-th drop unit over the whole
/// schedule, giving uniform requests that the schedule itself serves.
std::vector<TransportRequest> schedule_unit_requests(const Schedule& s) {
  std::vector<int> picks, drops;
  for (const Tour& t : s.tours)
    for (const Action& a : t.actions) {
      for (long long u = 0; u < a.dx; ++u) picks.push_back(a.station);
      for (long long u = 0; u < -a.dx; ++u) drops.push_back(a.station);
    }
  std::vector<TransportRequest> trs;
  for (size_t i = 0; i < picks.size() && i < drops.size(); ++i)
    trs.push_back(TransportRequest{picks[i], drops[i], 1});
  return trs;
}

Schedule uniformize_schedule(const Schedule& s) {
  Schedule u;
  for (const Tour& t : s.tours) u.tours.push_back(uniformize_tour(t));
  return u;
}

Variant parse_variant(const std::string& name) {
  if (name == "backhaul") return Variant::Backhaul;
  if (name == "nobackhaul") return Variant::NoBackhaul;
  if (name == "lowerbound") return Variant::PreemptiveLowerBound;
  throw Error("unknown variant: " + name);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    save_file(path, content);
}

int run_property_checks(int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  long long tours_checked = 0;
  long long run_len = 0, traverse = 0, steps = 0, pairing = 0,
            connectivity = 0, backhaul = 0;
  for (int s = 0; s < samples; ++s) {
    GeneratorParams gp;
    gp.stations = 2 + static_cast<int>(rng() % 4);
    gp.imbalanced = 2 * static_cast<int>(rng() % (gp.stations / 2 + 1));
    gp.depots = 1 + static_cast<int>(rng() % 2);
    gp.k = 1 + static_cast<int>(rng() % 2);
    gp.L = 1 + static_cast<int>(rng() % 3);
    gp.T = 100000;
    gp.plane = 30;
    gp.symmetric = rng() % 2 == 0;
    gp.seed = rng();
    const Instance inst = generate_instance(gp);
    Schedule sched;
    try {
      sched = reopt(inst, ReoptParams{1, 1, rng()});
    } catch (const NoFeasibleInsertionError&) {
      continue;
    }
    const Schedule uni = uniformize_schedule(sched);
    for (const Tour& t : uni.tours) {
      if (t.actions.empty()) continue;
      ++tours_checked;
      const auto [up, down] = max_consecutive_actions(t);
      if (up > inst.L || down > inst.L) ++run_len;
      const TourGraph g = build_tour_graph(t, inst.metric);
      const std::vector<TransportRequest> cdr = close_distance_requests(t);
      const auto constructed = construct_tour_alg2(t, cdr, inst.metric, 0);
      const TraverseCounter& f = constructed.second;
      for (size_t a = 0; a < g.arcs.size(); ++a) {
        if (f.count[a] > inst.L + 1) ++traverse;
        if (g.nodes[g.arcs[a].from].kind == TourNodeKind::Pickup &&
            f.count[a] > inst.L)
          ++traverse;
      }
      if (!traverse_step_deltas(f, g, transported_counts(t)).empty())
        ++steps;
      // Close-distance pairing: at most L actions between the paired units.
      {
        std::vector<int> pk, dr;
        for (size_t i = 0; i < t.actions.size(); ++i) {
          if (t.actions[i].dx > 0) pk.push_back(static_cast<int>(i));
          if (t.actions[i].dx < 0) dr.push_back(static_cast<int>(i));
        }
        for (size_t i = 0; i < pk.size() && i < dr.size(); ++i)
          if (dr[i] - pk[i] - 1 > inst.L) ++pairing;
      }
    }
    const std::vector<TransportRequest> units = schedule_unit_requests(uni);
    const TourConnectionGraph cg = build_tour_connection_graph(uni, units);
    if (!components_strongly_connected(cg)) ++connectivity;
    const Schedule rebuilt = construct_schedule_alg3(uni, units, inst.metric);
    for (const Tour& t : rebuilt.tours)
      if (t.moves.front().orig != t.moves.back().dest) ++backhaul;
    Instance relaxed = inst;
    relaxed.T = 1LL << 40;
    if (!validate_schedule(rebuilt, relaxed).ok()) ++backhaul;
  }
  std::cout << "samples " << samples << "\n"
            << "tours-checked " << tours_checked << "\n"
            << "run-length-violations " << run_len << "\n"
            << "traverse-bound-violations " << traverse << "\n"
            << "step-law-violations " << steps << "\n"
            << "pairing-distance-violations " << pairing << "\n"
            << "connectivity-violations " << connectivity << "\n"
            << "backhaul-violations " << backhaul << "\n";
  const long long total =
      run_len + traverse + steps + pairing + connectivity + backhaul;
  std::cout << (total == 0 ? "all-checks-pass" : "checks-failed") << "\n";
  return total == 0 ? kExitOk : kExitInfeasible;
}

int run_bound_checks(int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  int solved = 0, violations = 0;
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    GeneratorParams gp;
    gp.stations = 2 + static_cast<int>(rng() % 3);
    gp.imbalanced = 2;
    gp.depots = 1;
    gp.k = 1 + static_cast<int>(rng() % 2);
    gp.L = 1 + static_cast<int>(rng() % 2);
    gp.T = 60;
    gp.plane = 10;
    gp.max_surplus = 2;
    gp.symmetric = rng() % 2 == 0;
    gp.seed = rng();
    const Instance inst = generate_instance(gp);
    SolveLimits lim;
    lim.node_budget = 2'000'000;
    const SolveResult res = solve_exact(inst, Variant::Backhaul, lim);
    if (res.status != SolveStatus::Optimal) continue;
    Schedule sched;
    try {
      sched = reopt(inst, ReoptParams{1, 1, rng()});
    } catch (const NoFeasibleInsertionError&) {
      continue;
    }
    ++solved;
    const long long h = total_tour_length(sched, inst.metric);
    const BoundReport rep = check_approximation(inst, h, res.objective);
    if (!rep.pass) ++violations;
    worst = std::max(worst, rep.ratio);
  }
  std::cout << "samples " << samples << "\n"
            << "solved " << solved << "\n"
            << "bound-violations " << violations << "\n"
            << "worst-ratio " << worst << "\n";
  std::cout << (violations == 0 ? "all-checks-pass" : "checks-failed")
            << "\n";
  return violations == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"static relocation solver toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a random instance");
  GeneratorParams gp;
  std::string gen_out;
  bool gen_asym = false, gen_nobackhaul = false;
  gen->add_option("--stations", gp.stations, "number of stations");
  gen->add_option("--imbalanced", gp.imbalanced, "imbalanced stations (even)");
  gen->add_option("--depots", gp.depots, "number of depots");
  gen->add_option("-k,--drivers", gp.k, "number of drivers");
  gen->add_option("-L,--capacity", gp.L, "convoy capacity");
  gen->add_option("-T,--horizon", gp.T, "time horizon");
  gen->add_option("--plane", gp.plane, "plane side length");
  gen->add_option("--max-surplus", gp.max_surplus, "max per-station surplus");
  gen->add_option("--seed", gp.seed, "random seed");
  gen->add_flag("--asymmetric", gen_asym, "perturb directions independently");
  gen->add_flag("--no-backhaul", gen_nobackhaul,
                "drivers may end at any depot");
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");

  // match
  auto* match = app.add_subcommand("match", "min-cost perfect p-matching");
  std::string match_inst, match_out;
  match->add_option("-i,--instance", match_inst, "instance file")->required();
  match->add_option("-o,--out", match_out, "requests output path");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance");
  std::string solve_inst, solve_out, solve_lp, solve_variant = "backhaul";
  bool use_exact = false, use_heur = false;
  SolveLimits limits;
  ReoptParams rp;
  solve->add_option("-i,--instance", solve_inst, "instance file")->required();
  solve->add_flag("--exact", use_exact, "exact branch-and-bound");
  solve->add_flag("--heuristic", use_heur, "matching + insertion heuristic");
  solve->add_option("--variant", solve_variant,
                    "backhaul|nobackhaul|lowerbound");
  solve->add_option("--export-lp", solve_lp, "write the model as LP text");
  solve->add_option("--node-budget", limits.node_budget, "search node budget");
  solve->add_option("--time-budget", limits.time_budget, "seconds, 0 = off");
  solve->add_option("-N,--withdraw", rp.N, "requests withdrawn per round");
  solve->add_option("--delta", rp.Delta, "improvement rounds");
  solve->add_option("--seed", rp.seed, "heuristic seed");
  solve->add_option("-o,--out", solve_out, "schedule output path");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "empirical lemma/bound checks");
  std::string check = "lemmas";
  int samples = 100;
  unsigned long long an_seed = 1;
  analyze->add_option("--check", check, "lemmas|bounds")->required();
  analyze->add_option("--samples", samples, "number of random samples");
  analyze->add_option("--seed", an_seed, "suite seed");

  // compare
  auto* compare = app.add_subcommand("compare", "heuristic vs exact gap");
  std::string cmp_inst;
  SolveLimits cmp_limits;
  ReoptParams cmp_rp;
  compare->add_option("-i,--instance", cmp_inst, "instance file")->required();
  compare->add_option("--node-budget", cmp_limits.node_budget,
                      "search node budget");
  compare->add_option("--time-budget", cmp_limits.time_budget,
                      "seconds, 0 = off");
  compare->add_option("-N,--withdraw", cmp_rp.N, "requests withdrawn");
  compare->add_option("--delta", cmp_rp.Delta, "improvement rounds");
  compare->add_option("--seed", cmp_rp.seed, "heuristic seed");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "graph exports for graphviz");
  std::string dot_inst, dot_sched, dot_graph = "network", dot_out;
  int dot_tour = 0;
  dot->add_option("-i,--instance", dot_inst, "instance file")->required();
  dot->add_option("--schedule", dot_sched, "schedule file");
  dot->add_option("--graph", dot_graph, "network|tour|transport|connection");
  dot->add_option("--tour", dot_tour, "tour index for tour/transport graphs");
  dot->add_option("-o,--out", dot_out, "output path (default stdout)");

  // export-lp
  auto* lp = app.add_subcommand("export-lp", "write the flow model as LP");
  std::string lp_inst, lp_out, lp_variant = "backhaul";
  lp->add_option("-i,--instance", lp_inst, "instance file")->required();
  lp->add_option("--variant", lp_variant, "backhaul|nobackhaul|lowerbound");
  lp->add_option("-o,--out", lp_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      gp.symmetric = !gen_asym;
      gp.backhaul = !gen_nobackhaul;
      const Instance inst = generate_instance(gp);
      write_output(gen_out, write_instance(inst));
      return kExitOk;
    }

    if (*match) {
      const Instance inst = load_instance(match_inst);
      const std::vector<TransportRequest> trs = matching_requests(inst);
      long long cost = 0;
      for (const TransportRequest& r : trs)
        cost += inst.metric(r.origin, r.destination) * r.x;
      std::cout << "requests " << trs.size() << "\n"
                << "matching-cost " << cost << "\n";
      if (!match_out.empty())
        save_file(match_out, write_requests(trs, inst.network));
      return kExitOk;
    }

    if (*solve) {
      const Instance inst = load_instance(solve_inst);
      const Variant variant = parse_variant(solve_variant);
      if (!solve_lp.empty()) {
        const TimeExpandedNetwork ten = build_time_expanded(inst);
        const IlpModel model = build_ilp(ten, inst, variant);
        std::ostringstream os;
        export_lp(model, os);
        save_file(solve_lp, os.str());
      }
      if (use_exact && use_heur)
        throw Error("choose one of --exact and --heuristic");
      const auto t0 = std::chrono::steady_clock::now();
      if (use_exact) {
        const SolveResult res = solve_exact(inst, variant, limits);
        std::cout << "status "
                  << (res.status == SolveStatus::Optimal ? "optimal"
                      : res.status == SolveStatus::Infeasible
                          ? "infeasible"
                          : "budget-exhausted")
                  << "\n";
        if (res.status == SolveStatus::Optimal)
          std::cout << "objective " << res.objective << "\n";
        if (res.has_incumbent && res.status != SolveStatus::Optimal)
          std::cout << "incumbent " << res.objective << "\n";
        std::cout << "bound " << res.bound << "\n"
                  << "nodes " << res.nodes << "\n"
                  << "runtime " << seconds_since(t0) << "\n";
        if (res.schedule && !solve_out.empty())
          save_file(solve_out, write_schedule(*res.schedule, inst.network));
        if (res.status == SolveStatus::Infeasible) return kExitInfeasible;
        if (res.status == SolveStatus::BudgetExhausted) return kExitBudget;
        return kExitOk;
      }
      Schedule sched;
      try {
        sched = reopt(inst, rp);
      } catch (const NoFeasibleInsertionError& e) {
        std::cout << "status infeasible\n" << e.what() << "\n";
        return kExitInfeasible;
      }
      const ValidationReport rep = validate_schedule(sched, inst);
      std::cout << "status " << (rep.ok() ? "feasible" : "invalid") << "\n"
                << "length " << total_tour_length(sched, inst.metric) << "\n"
                << "runtime " << seconds_since(t0) << "\n";
      if (!rep.ok()) std::cout << rep.summary();
      if (!solve_out.empty())
        save_file(solve_out, write_schedule(sched, inst.network));
      return rep.ok() ? kExitOk : kExitInfeasible;
    }

    if (*analyze) {
      if (check == "lemmas") return run_property_checks(samples, an_seed);
      if (check == "bounds") return run_bound_checks(samples, an_seed);
      throw Error("unknown check: " + check);
    }

    if (*compare) {
      const Instance inst = load_instance(cmp_inst);
      const auto th = std::chrono::steady_clock::now();
      Schedule sched;
      try {
        sched = reopt(inst, cmp_rp);
      } catch (const NoFeasibleInsertionError& e) {
        std::cout << "status infeasible\n" << e.what() << "\n";
        return kExitInfeasible;
      }
      const double heur_time = seconds_since(th);
      const long long h = total_tour_length(sched, inst.metric);
      const auto te = std::chrono::steady_clock::now();
      const SolveResult res = solve_exact(inst, Variant::Backhaul, cmp_limits);
      const double exact_time = seconds_since(te);
      const bool opt = res.status == SolveStatus::Optimal;
      long long ref;
      if (opt) {
        ref = res.objective;
      } else if (res.status == SolveStatus::Infeasible) {
        std::cout << "status infeasible\n";
        return kExitInfeasible;
      } else {
        ref = res.bound;
      }
      const double gap =
          h == 0 ? 0.0
                 : static_cast<double>(h - ref) / static_cast<double>(h);
      std::cout << "instance " << cmp_inst << "\n"
                << "heuristic-length " << h << "\n"
                << (opt ? "exact-length " : "lower-bound ") << ref << "\n"
                << "gap " << gap << "\n"
                << "heuristic-runtime " << heur_time << "\n"
                << "reference-runtime " << exact_time << "\n";
      return kExitOk;
    }

    if (*dot) {
      const Instance inst = load_instance(dot_inst);
      std::ostringstream os;
      if (dot_graph == "network") {
        export_dot(inst.network, os);
      } else {
        if (dot_sched.empty())
          throw Error("--schedule is required for " + dot_graph);
        const Schedule sched = load_schedule(dot_sched, inst.network);
        if (dot_graph == "connection") {
          const Schedule uni = uniformize_schedule(sched);
          export_dot(
              build_tour_connection_graph(uni, schedule_unit_requests(uni)),
              os);
        } else {
          if (dot_tour < 0 || dot_tour >= static_cast<int>(sched.tours.size()))
            throw Error("tour index out of range");
          const Tour uni = uniformize_tour(sched.tours[dot_tour]);
          const TourGraph g = build_tour_graph(uni, inst.metric);
          if (dot_graph == "tour") {
            export_dot(g, inst.network, os);
          } else if (dot_graph == "transport") {
            export_dot(build_transport_graph(g, close_distance_requests(uni),
                                             inst.metric),
                       inst.network, os);
          } else {
            throw Error("unknown graph: " + dot_graph);
          }
        }
      }
      write_output(dot_out, os.str());
      return kExitOk;
    }

    if (*lp) {
      const Instance inst = load_instance(lp_inst);
      const TimeExpandedNetwork ten = build_time_expanded(inst);
      const IlpModel model = build_ilp(ten, inst, parse_variant(lp_variant));
      std::ostringstream os;
      export_lp(model, os);
      write_output(lp_out, os.str());
      return kExitOk;
    }
  } catch (const relo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitOk;
}
