#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relocation/network.hpp"

namespace relo {

struct Action {
  int driver = 0;
  int station = -1;
  long long time = 0;
  long long dx = 0;  // > 0: cars loaded, < 0: cars unloaded

  bool operator==(const Action&) const = default;
};

struct Move {
  int driver = 0;
  int orig = -1;
  long long dep = 0;
  int dest = -1;
  long long arr = 0;
  long long load = 0;

  bool waiting() const { return orig == dest; }
  bool operator==(const Move&) const = default;
};

/// Request served by a tour, with the indices of its pickup and drop actions.
struct Served {
  int origin = -1;
  int destination = -1;
  long long y = 0;
  int pickup_action = -1;
  int drop_action = -1;

  bool operator==(const Served&) const = default;
};

/// Alternating sequence of moves and actions for one driver:
/// moves[0], actions[0], moves[1], ..., actions[n-2], moves[n-1].
struct Tour {
  int driver = 0;
  int depot = -1;
  std::vector<Move> moves;
  std::vector<Action> actions;
  std::vector<Served> served;  // request-to-tour bookkeeping

  bool operator==(const Tour& o) const {
    return driver == o.driver && depot == o.depot && moves == o.moves &&
           actions == o.actions && served == o.served;
  }
};

struct Schedule {
  std::vector<Tour> tours;
};

/// Stationary depot tour (j, v_D, 0, v_D, 0, 0).
Tour empty_tour(int driver, int depot);

long long tour_length(const Tour& tour, const QuasiMetric& d);
long long total_tour_length(const Schedule& s, const QuasiMetric& d);

enum class ViolationKind {
  TourCount,
  DriverMismatch,
  LocationChain,
  TimeChain,
  LoadBound,
  LoadChain,
  DepotStart,
  DepotEnd,
  BackhaulViolation,
  HorizonExceeded,
  MoveDuration,
  TaskNotServed,
  InfeasibleState,
  PreemptionPickup,
  PreemptionDrop,
  ActionAtBalanced,
  ActionAtDepot,
  ActionBound,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int driver = -1;
  int node = -1;
  long long time = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct StatePoint {
  long long time;
  SystemState z;
};

struct SimulationResult {
  std::vector<StatePoint> trajectory;
  std::optional<Violation> first_violation;
  bool feasible() const { return !first_violation.has_value(); }
};

/// Replays all actions of the schedule in time order (deltas at the same
/// station and time are netted, as in the flow model) and reports the state
/// trajectory plus the first capacity/negativity violation, if any.
SimulationResult simulate_states(const Schedule& s, const Instance& inst);

/// Exhaustive feasibility check: tour invariants, task serving, state
/// feasibility, non-preemption and depot rules. Collects every violation.
ValidationReport validate_schedule(const Schedule& s, const Instance& inst);

}  // namespace relo
