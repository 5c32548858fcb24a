#include <cstdlib>

#include "relocation/schedule.hpp"

namespace relo {

namespace {

void check_tour(const Tour& t, const Instance& inst, ValidationReport& rep) {
  auto add = [&](ViolationKind k, int node, long long time,
                 const std::string& detail) {
    rep.violations.push_back(Violation{k, t.driver, node, time, detail});
  };

  if (t.moves.empty() || t.moves.size() != t.actions.size() + 1) {
    add(ViolationKind::TourCount, -1, -1, "malformed move/action alternation");
    return;
  }

  const auto& net = inst.network;
  const auto& d = inst.metric;

  for (const Move& m : t.moves) {
    if (m.driver != t.driver)
      add(ViolationKind::DriverMismatch, m.orig, m.dep, "move driver");
    if (m.load < 0 || m.load > inst.L)
      add(ViolationKind::LoadBound, m.orig, m.dep, "convoy load out of [0,L]");
    if (!m.waiting() && m.arr != m.dep + d(m.orig, m.dest))
      add(ViolationKind::MoveDuration, m.orig, m.dep,
          "arrival != departure + d(orig,dest)");
    if (m.waiting() && m.arr < m.dep)
      add(ViolationKind::MoveDuration, m.orig, m.dep, "negative waiting time");
  }
  for (const Action& a : t.actions) {
    if (a.driver != t.driver)
      add(ViolationKind::DriverMismatch, a.station, a.time, "action driver");
    if (std::llabs(a.dx) > inst.L)
      add(ViolationKind::ActionBound, a.station, a.time, "|dx| > L");
  }
  for (size_t i = 0; i < t.actions.size(); ++i) {
    const Move& before = t.moves[i];
    const Move& after = t.moves[i + 1];
    const Action& a = t.actions[i];
    if (before.dest != a.station || after.orig != a.station)
      add(ViolationKind::LocationChain, a.station, a.time,
          "move/action locations disagree");
    if (before.arr != a.time || after.dep != a.time)
      add(ViolationKind::TimeChain, a.station, a.time,
          "move/action times disagree");
    if (after.load != before.load + a.dx)
      add(ViolationKind::LoadChain, a.station, a.time,
          "load(m+1) != load(m) + dx");
  }

  const Move& first = t.moves.front();
  const Move& last = t.moves.back();
  if (!net.depot[first.orig] || first.load != 0)
    add(ViolationKind::DepotStart, first.orig, first.dep,
        "tour must start empty at a depot");
  if (t.depot >= 0 && first.orig != t.depot)
    add(ViolationKind::DepotStart, first.orig, first.dep,
        "tour starts at a different depot than assigned");
  if (!net.depot[last.dest] || last.load != 0)
    add(ViolationKind::DepotEnd, last.dest, last.arr,
        "tour must end empty at a depot");
  if (inst.backhaul && last.dest != first.orig)
    add(ViolationKind::BackhaulViolation, last.dest, last.arr,
        "tour does not return to its start depot");
  if (last.arr > inst.T || first.dep < 0)
    add(ViolationKind::HorizonExceeded, last.dest, last.arr,
        "tour leaves the time horizon");
}

}  // namespace

ValidationReport validate_schedule(const Schedule& s, const Instance& inst) {
  ValidationReport rep;
  if (static_cast<int>(s.tours.size()) != inst.k)
    rep.violations.push_back(Violation{ViolationKind::TourCount, -1, -1, -1,
                                       "schedule must have exactly k tours"});
  for (size_t i = 0; i < s.tours.size(); ++i)
    if (s.tours[i].driver != static_cast<int>(i))
      rep.violations.push_back(
          Violation{ViolationKind::DriverMismatch, static_cast<int>(i), -1, -1,
                    "tour index does not match driver"});

  const auto assigned = inst.driver_depots();
  for (const Tour& t : s.tours) {
    check_tour(t, inst, rep);
    if (inst.backhaul && t.driver >= 0 &&
        t.driver < static_cast<int>(assigned.size()) && !t.moves.empty() &&
        t.moves.front().orig != assigned[t.driver])
      rep.violations.push_back(
          Violation{ViolationKind::DepotStart, t.driver, t.moves.front().orig, 0,
                    "driver does not start at its assigned depot"});
  }

  // Non-preemption: pickups only at overfull stations, drops only at
  // underfull ones, no actions at balanced stations or depots.
  const StationClasses cls = classify_stations(inst.network, inst.z0, inst.zT);
  std::vector<int> kind(inst.network.node_count(), 0);  // 1=over,-1=under
  for (int v : cls.overfull) kind[v] = 1;
  for (int v : cls.underfull) kind[v] = -1;
  for (const Tour& t : s.tours)
    for (const Action& a : t.actions) {
      if (a.dx == 0) continue;
      if (inst.network.depot[a.station])
        rep.violations.push_back(Violation{ViolationKind::ActionAtDepot,
                                           t.driver, a.station, a.time, ""});
      else if (kind[a.station] == 0)
        rep.violations.push_back(Violation{ViolationKind::ActionAtBalanced,
                                           t.driver, a.station, a.time, ""});
      else if (kind[a.station] > 0 && a.dx < 0)
        rep.violations.push_back(Violation{ViolationKind::PreemptionDrop,
                                           t.driver, a.station, a.time,
                                           "drop at overfull station"});
      else if (kind[a.station] < 0 && a.dx > 0)
        rep.violations.push_back(Violation{ViolationKind::PreemptionPickup,
                                           t.driver, a.station, a.time,
                                           "pickup at underfull station"});
    }

  // Task serving: per station the signed pickup/drop sums must match the
  // state difference.
  std::vector<long long> sum(inst.network.node_count(), 0);
  for (const Tour& t : s.tours)
    for (const Action& a : t.actions) sum[a.station] += a.dx;
  for (int v : inst.network.stations())
    if (sum[v] != inst.z0[v] - inst.zT[v])
      rep.violations.push_back(Violation{ViolationKind::TaskNotServed, -1, v,
                                         -1, "action sum != z0 - zT"});

  SimulationResult sim = simulate_states(s, inst);
  if (sim.first_violation) rep.violations.push_back(*sim.first_violation);

  return rep;
}

}  // namespace relo
