#include <algorithm>
#include <chrono>
#include <map>
#include <queue>

#include "relocation/matching.hpp"
#include "relocation/solver.hpp"

namespace relo {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  long long node_budget;
  double time_budget;
  Clock::time_point start = Clock::now();
  long long nodes = 0;

  bool spent() {
    ++nodes;
    if (node_budget > 0 && nodes > node_budget) return true;
    if (time_budget > 0 && (nodes & 1023) == 0) {
      const double s =
          std::chrono::duration<double>(Clock::now() - start).count();
      if (s > time_budget) return true;
    }
    return false;
  }
};

/// ceil(matching cost / L): cars must cover at least the p-matching distance
/// and at most L of them share a driver; valid for every variant.
long long matching_bound(const Instance& inst) {
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  if (tasks.empty()) return 0;
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  const long long cost = min_cost_perfect_p_matching(bi).cost;
  return (cost + inst.L - 1) / inst.L;
}

// ---------------------------------------------------------------------------
// Non-preemptive variants: drivers are routed sequentially through the
// time-expanded network by a best-first (uniform-cost) search. Tours in a
// non-preemptive schedule are mutually independent -- station stocks evolve
// monotonically -- so routing driver i+1 after driver i loses no solutions.
// ---------------------------------------------------------------------------

// remaining |surplus| per node; driver position; force_empty marks drivers
// that must stay idle because an earlier same-depot driver stayed idle
// (symmetry reduction).
using SeqKey = std::tuple<int /*driver*/, int /*node*/, long long /*t*/,
                          long long /*load*/, int /*force_empty*/,
                          std::vector<long long> /*rem*/>;

struct SeqStep {
  bool retire = false;
  int to = -1;
  long long dx = 0;  // signed action at arrival (+pickup, -drop)
};

struct SeqInfo {
  long long cost = 0;
  SeqKey parent;
  SeqStep step;
  bool has_parent = false;
};

SolveResult solve_sequential(const Instance& inst, Variant variant,
                             const SolveLimits& limits) {
  const int n = inst.network.node_count();
  const StationClasses cls =
      classify_stations(inst.network, inst.z0, inst.zT);
  std::vector<int> kind(n, 0);
  for (int v : cls.overfull) kind[v] = 1;
  for (int v : cls.underfull) kind[v] = -1;
  std::vector<long long> rem0(n, 0);
  for (int v = 0; v < n; ++v)
    rem0[v] = inst.z0[v] > inst.zT[v] ? inst.z0[v] - inst.zT[v]
                                      : inst.zT[v] - inst.z0[v];
  const std::vector<int> depots = inst.driver_depots();
  const bool backhaul = variant == Variant::Backhaul;

  std::map<SeqKey, SeqInfo> info;
  using QItem = std::pair<long long, SeqKey>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> pq;

  const SeqKey start{0, depots[0], 0, 0, 0, rem0};
  info[start] = SeqInfo{0, start, {}, false};
  pq.push({0, start});

  Budget budget{limits.node_budget, limits.time_budget};
  SolveResult res;
  long long frontier = 0;

  auto relax = [&](const SeqKey& key, long long cost, const SeqKey& parent,
                   const SeqStep& step) {
    auto it = info.find(key);
    if (it != info.end() && it->second.cost <= cost) return;
    info[key] = SeqInfo{cost, parent, step, true};
    pq.push({cost, key});
  };

  while (!pq.empty()) {
    auto [cost, key] = pq.top();
    pq.pop();
    const SeqInfo cur = info[key];
    if (cur.cost != cost) continue;
    frontier = cost;
    const auto& [d, v, t, load, fe, rem] = key;

    if (d == inst.k) {
      // Terminal: all drivers retired, every task served.
      res.status = SolveStatus::Optimal;
      res.objective = cost;
      res.bound = cost;
      res.nodes = budget.nodes;

      // Reconstruct tours from the parent chain.
      std::vector<std::vector<SeqStep>> steps(inst.k);
      SeqKey at = key;
      while (info[at].has_parent) {
        const SeqInfo& si = info[at];
        const int driver = std::get<0>(si.parent);
        if (!si.step.retire) steps[driver].push_back(si.step);
        at = si.parent;
      }
      Schedule sched;
      for (int j = 0; j < inst.k; ++j) {
        std::reverse(steps[j].begin(), steps[j].end());
        if (steps[j].empty()) {
          sched.tours.push_back(empty_tour(j, depots[j]));
          continue;
        }
        Tour tour;
        tour.driver = j;
        tour.depot = depots[j];
        int at_node = depots[j];
        long long at_t = 0, at_load = 0;
        for (size_t s = 0; s < steps[j].size(); ++s) {
          const SeqStep& st = steps[j][s];
          const long long dur = inst.metric(at_node, st.to);
          tour.moves.push_back(
              Move{j, at_node, at_t, st.to, at_t + dur, at_load});
          at_node = st.to;
          at_t += dur;
          if (s + 1 < steps[j].size()) {
            tour.actions.push_back(Action{j, at_node, at_t, st.dx});
            at_load += st.dx;
          }
        }
        sched.tours.push_back(std::move(tour));
      }
      res.schedule = std::move(sched);
      return res;
    }

    if (budget.spent()) {
      res.status = SolveStatus::BudgetExhausted;
      res.bound = std::max(frontier, matching_bound(inst));
      res.nodes = budget.nodes;
      return res;
    }

    // Retire the current driver and hand over to the next one.
    const bool may_end =
        load == 0 && (backhaul ? v == depots[d] : inst.network.depot[v]);
    if (may_end) {
      const bool empty = t == 0 && v == depots[d];
      const bool last = d + 1 == inst.k;
      const bool done =
          std::all_of(rem.begin(), rem.end(), [](long long r) { return r == 0; });
      if (!last || done) {
        const int next_fe =
            !last && depots[d + 1] == depots[d] && empty ? 1 : 0;
        SeqKey nxt{d + 1, last ? 0 : depots[d + 1], 0, 0, next_fe, rem};
        relax(nxt, cost, key, SeqStep{true, -1, 0});
      }
    }
    if (fe) continue;  // forced-idle driver: retiring was the only option

    // Moves; the action happens on arrival.
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const long long dur = inst.metric(v, w);
      if (t + dur > inst.T) continue;
      long long lo = 0, hi = 0;  // signed action range at w
      if (kind[w] > 0)
        hi = std::min(rem[w], inst.L - load);
      else if (kind[w] < 0)
        lo = -std::min(load, rem[w]);
      for (long long dx = lo; dx <= hi; ++dx) {
        std::vector<long long> rem2 = rem;
        rem2[w] -= dx < 0 ? -dx : dx;
        SeqKey nxt{d, w, t + dur, load + dx, 0, std::move(rem2)};
        relax(nxt, cost + dur, key, SeqStep{false, w, dx});
      }
    }
  }

  res.status = SolveStatus::Infeasible;
  res.bound = 0;
  res.nodes = budget.nodes;
  return res;
}

// ---------------------------------------------------------------------------
// PreemptiveLowerBound: joint chronological search. Drivers advance in event
// order (least ready time first); cars may be picked up or dropped at any
// station within stock and capacity limits. Objective only.
// ---------------------------------------------------------------------------

using DriverTuple = std::tuple<long long /*t*/, int /*node*/, long long /*load*/>;
using PreKey = std::pair<std::vector<DriverTuple>, std::vector<long long>>;

SolveResult solve_preemptive(const Instance& inst, const SolveLimits& limits) {
  const int n = inst.network.node_count();
  const DriverTuple done{inst.T + 1, n, 0};

  PreKey start;
  for (int dep : inst.driver_depots()) start.first.push_back({0, dep, 0});
  std::sort(start.first.begin(), start.first.end());
  start.second = inst.z0;

  std::map<PreKey, long long> dist;
  using QItem = std::pair<long long, PreKey>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> pq;
  dist[start] = 0;
  pq.push({0, start});

  Budget budget{limits.node_budget, limits.time_budget};
  SolveResult res;
  long long frontier = 0;

  auto relax = [&](PreKey key, long long cost) {
    std::sort(key.first.begin(), key.first.end());
    auto it = dist.find(key);
    if (it != dist.end() && it->second <= cost) return;
    dist[key] = cost;
    pq.push({cost, std::move(key)});
  };

  while (!pq.empty()) {
    auto [cost, key] = pq.top();
    pq.pop();
    if (dist[key] != cost) continue;
    frontier = cost;
    const auto& [drv, z] = key;

    const bool all_done =
        std::all_of(drv.begin(), drv.end(),
                    [&](const DriverTuple& x) { return x == done; });
    if (all_done && z == inst.zT) {
      res.status = SolveStatus::Optimal;
      res.objective = cost;
      res.bound = cost;
      res.nodes = budget.nodes;
      return res;
    }

    if (budget.spent()) {
      res.status = SolveStatus::BudgetExhausted;
      res.bound = std::max(frontier, matching_bound(inst));
      res.nodes = budget.nodes;
      return res;
    }
    if (all_done) continue;

    // Advance only drivers at the earliest pending event time, so stock
    // checks follow the chronology of the schedule.
    long long tmin = inst.T + 1;
    for (const DriverTuple& x : drv)
      if (x != done) tmin = std::min(tmin, std::get<0>(x));
    for (size_t i = 0; i < drv.size(); ++i) {
      if (drv[i] == done || std::get<0>(drv[i]) != tmin) continue;
      if (i > 0 && drv[i] == drv[i - 1]) continue;  // identical drivers
      const auto [t, v, load] = drv[i];

      // Act at the current station.
      if (inst.network.station[v]) {
        for (long long a = 1; a <= std::min(z[v], inst.L - load); ++a) {
          PreKey nxt = key;
          nxt.first[i] = {t, v, load + a};
          nxt.second[v] -= a;
          relax(std::move(nxt), cost);
        }
        for (long long a = 1;
             a <= std::min(load, inst.network.cap[v] - z[v]); ++a) {
          PreKey nxt = key;
          nxt.first[i] = {t, v, load - a};
          nxt.second[v] += a;
          relax(std::move(nxt), cost);
        }
      }
      // Move.
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        const long long dur = inst.metric(v, w);
        if (t + dur > inst.T) continue;
        PreKey nxt = key;
        nxt.first[i] = {t + dur, w, load};
        relax(std::move(nxt), cost + dur);
      }
      // Wait (empty convoy only; a loaded wait is dominated by drop+wait).
      if (load == 0 && t + 1 <= inst.T) {
        PreKey nxt = key;
        nxt.first[i] = {t + 1, v, 0};
        relax(std::move(nxt), cost);
      }
      // Retire at any depot.
      if (load == 0 && inst.network.depot[v]) {
        PreKey nxt = key;
        nxt.first[i] = done;
        relax(std::move(nxt), cost);
      }
    }
  }

  res.status = SolveStatus::Infeasible;
  res.nodes = budget.nodes;
  return res;
}

}  // namespace

SolveResult solve_exact(const Instance& inst, Variant variant,
                        const SolveLimits& limits) {
  if (variant == Variant::PreemptiveLowerBound)
    return solve_preemptive(inst, limits);
  return solve_sequential(inst, variant, limits);
}

SolveResult solve_exact_bnb(const IlpModel& model,
                            const TimeExpandedNetwork& ten,
                            const Instance& inst, const SolveLimits& limits) {
  SolveResult res = solve_exact(inst, model.variant, limits);
  if (res.status == SolveStatus::Optimal && res.schedule &&
      model.variant != Variant::PreemptiveLowerBound)
    res.flow = encode_flows(*res.schedule, model, ten, inst);
  return res;
}

long long lower_bound(const Instance& inst, const SolveLimits& limits) {
  const SolveResult res = solve_preemptive(inst, limits);
  if (res.status == SolveStatus::Optimal) return res.objective;
  if (res.status == SolveStatus::BudgetExhausted) return res.bound;
  return matching_bound(inst);  // infeasible preemptively: report the static bound
}

}  // namespace relo
