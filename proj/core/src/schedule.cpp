#include "relocation/schedule.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace relo {

Tour empty_tour(int driver, int depot) {
  Tour t;
  t.driver = driver;
  t.depot = depot;
  t.moves.push_back(Move{driver, depot, 0, depot, 0, 0});
  return t;
}

long long tour_length(const Tour& tour, const QuasiMetric& d) {
  long long len = 0;
  for (const Move& m : tour.moves)
    if (!m.waiting()) len += d(m.orig, m.dest);
  return len;
}

long long total_tour_length(const Schedule& s, const QuasiMetric& d) {
  long long len = 0;
  for (const Tour& t : s.tours) len += tour_length(t, d);
  return len;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::TourCount: return "TourCount";
    case ViolationKind::DriverMismatch: return "DriverMismatch";
    case ViolationKind::LocationChain: return "LocationChain";
    case ViolationKind::TimeChain: return "TimeChain";
    case ViolationKind::LoadBound: return "LoadBound";
    case ViolationKind::LoadChain: return "LoadChainViolation";
    case ViolationKind::DepotStart: return "DepotStart";
    case ViolationKind::DepotEnd: return "DepotEnd";
    case ViolationKind::BackhaulViolation: return "BackhaulViolation";
    case ViolationKind::HorizonExceeded: return "HorizonExceeded";
    case ViolationKind::MoveDuration: return "MoveDuration";
    case ViolationKind::TaskNotServed: return "TaskNotServed";
    case ViolationKind::InfeasibleState: return "InfeasibleState";
    case ViolationKind::PreemptionPickup: return "PreemptionPickup";
    case ViolationKind::PreemptionDrop: return "PreemptionDrop";
    case ViolationKind::ActionAtBalanced: return "ActionAtBalanced";
    case ViolationKind::ActionAtDepot: return "ActionAtDepot";
    case ViolationKind::ActionBound: return "ActionBound";
  }
  return "Unknown";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << to_string(v.kind) << " driver=" << v.driver << " node=" << v.node
       << " t=" << v.time;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

SimulationResult simulate_states(const Schedule& s, const Instance& inst) {
  // Net deltas per (time, station); a positive action dx removes cars.
  std::map<std::pair<long long, int>, long long> deltas;
  for (const Tour& t : s.tours)
    for (const Action& a : t.actions)
      if (a.dx != 0) deltas[{a.time, a.station}] -= a.dx;

  SimulationResult res;
  SystemState z = inst.z0;
  res.trajectory.push_back(StatePoint{0, z});
  for (auto it = deltas.begin(); it != deltas.end();) {
    const long long time = it->first.first;
    for (; it != deltas.end() && it->first.first == time; ++it) {
      const int station = it->first.second;
      z[station] += it->second;
      if (!res.first_violation) {
        if (z[station] < 0)
          res.first_violation = Violation{ViolationKind::InfeasibleState, -1,
                                          station, time, "negative car count"};
        else if (inst.network.station[station] &&
                 z[station] > inst.network.cap[station])
          res.first_violation = Violation{ViolationKind::InfeasibleState, -1,
                                          station, time, "capacity exceeded"};
      }
    }
    if (res.trajectory.back().time == time)
      res.trajectory.back().z = z;
    else
      res.trajectory.push_back(StatePoint{time, z});
  }
  return res;
}

}  // namespace relo
