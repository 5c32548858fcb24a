#include <algorithm>
#include <map>

#include "relocation/ilp.hpp"

namespace relo {

namespace {

int find_relocation_arc(const TimeExpandedNetwork& ten, int v, long long t,
                        int w) {
  for (int a : ten.out_arcs(v, t))
    if (ten.arcs[a].relocation && ten.arcs[a].to == w) return a;
  return -1;
}

}  // namespace

FlowSolution encode_flows(const Schedule& s, const IlpModel& model,
                          const TimeExpandedNetwork& ten,
                          const Instance& inst) {
  if (model.variant == Variant::PreemptiveLowerBound)
    throw Error("cannot encode a schedule into the aggregated model");
  FlowSolution sol;
  sol.value.assign(model.vars.size(), 0);
  if (inst.T == 0) return sol;

  for (const Tour& tour : s.tours) {
    const int j = tour.driver;
    long long t = 0;
    int at = tour.moves.front().orig;
    // Driver idle before departure.
    for (long long u = t; u < tour.moves.front().dep; ++u)
      sol.value[model.F(j, ten.holdover(at, u))] = 1;
    for (const Move& m : tour.moves) {
      if (m.waiting()) {
        for (long long u = m.dep; u < m.arr; ++u)
          sol.value[model.F(j, ten.holdover(m.orig, u))] = 1;
      } else {
        const int a = find_relocation_arc(ten, m.orig, m.dep, m.dest);
        if (a < 0) throw MalformedFlowError("move has no matching arc");
        sol.value[model.F(j, a)] = 1;
        sol.value[model.f(j, a)] = m.load;
      }
      at = m.dest;
      t = m.arr;
    }
    // Driver idle until the end of the horizon.
    for (long long u = t; u < inst.T; ++u)
      sol.value[model.F(j, ten.holdover(at, u))] = 1;
  }

  // Station stocks on holdover arcs, derived from the netted action deltas.
  std::map<std::pair<int, long long>, long long> delta;
  for (const Tour& tour : s.tours)
    for (const Action& a : tour.actions)
      if (a.dx != 0) delta[{a.station, a.time}] -= a.dx;
  for (int v : inst.network.stations()) {
    long long z = inst.z0[v];
    std::vector<std::pair<long long, long long>> evs;
    for (const auto& [key, d] : delta)
      if (key.first == v) evs.push_back({key.second, d});
    size_t e = 0;
    for (long long t = 0; t < inst.T; ++t) {
      while (e < evs.size() && evs[e].first <= t) z += evs[e++].second;
      sol.value[model.fh(v, t)] = z;
    }
  }
  sol.objective = model.objective_value(sol.value);
  return sol;
}

Schedule decode_schedule(const FlowSolution& sol, const IlpModel& model,
                         const TimeExpandedNetwork& ten,
                         const Instance& inst) {
  if (model.variant == Variant::PreemptiveLowerBound)
    throw Error("the aggregated lower-bound model is never decoded");

  Schedule s;
  const std::vector<int> depots = inst.driver_depots();
  for (int j = 0; j < inst.k; ++j) {
    // Count this driver's unit arcs, then trace the unique path from t=0.
    long long arcs_with_flow = 0;
    for (size_t a = 0; a < model.arc_count; ++a)
      if (sol.value[model.F(j, a)] != 0) ++arcs_with_flow;
    if (arcs_with_flow == 0) {
      s.tours.push_back(empty_tour(j, depots[j]));
      continue;
    }

    int start = -1;
    for (int v = 0; v < ten.n; ++v) {
      for (int a : ten.out_arcs(v, 0))
        if (sol.value[model.F(j, a)] != 0) {
          if (start >= 0 && start != v)
            throw MalformedFlowError("driver flow has several sources");
          start = v;
        }
    }
    if (start < 0) throw MalformedFlowError("driver flow has no source");
    if (!inst.network.depot[start])
      throw MalformedFlowError("driver flow does not start at a depot");

    Tour tour;
    tour.driver = j;
    tour.depot = start;
    int v = start;
    long long t = 0, load = 0, used = 0;
    bool pending_action = false;
    while (t < ten.T) {
      int next = -1;
      for (int a : ten.out_arcs(v, t))
        if (sol.value[model.F(j, a)] != 0) {
          if (next >= 0)
            throw MalformedFlowError("driver flow splits at a node");
          next = a;
        }
      if (next < 0) throw MalformedFlowError("driver flow stops early");
      ++used;
      const TenArc& arc = ten.arcs[next];
      if (arc.relocation) {
        const long long carried = sol.value[model.f(j, next)];
        if (pending_action)
          tour.actions.push_back(Action{j, v, t, carried - load});
        tour.moves.push_back(Move{j, v, t, arc.to, arc.t_to, carried});
        load = carried;
        pending_action = true;
      } else {
        // Merge consecutive holdovers into one empty waiting move.
        long long end = arc.t_to;
        while (end < ten.T) {
          int cont = -1;
          for (int a : ten.out_arcs(v, end))
            if (sol.value[model.F(j, a)] != 0 && !ten.arcs[a].relocation)
              cont = a;
          if (cont < 0) break;
          ++used;
          end = ten.arcs[cont].t_to;
        }
        if (pending_action) tour.actions.push_back(Action{j, v, t, -load});
        tour.moves.push_back(Move{j, v, t, v, end, 0});
        load = 0;
        pending_action = true;
      }
      v = arc.to;
      t = arc.relocation ? arc.t_to
                         : tour.moves.back().arr;
    }
    if (used != arcs_with_flow)
      throw MalformedFlowError("driver flow is not a single path");
    if (load != 0)
      throw MalformedFlowError("driver ends the horizon loaded");
    if (!inst.network.depot[v])
      throw MalformedFlowError("driver flow does not end at a depot");
    s.tours.push_back(std::move(tour));
  }
  return s;
}

}  // namespace relo
