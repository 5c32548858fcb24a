#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "relocation/schedule.hpp"
#include "relocation/time_expanded.hpp"

namespace relo {

enum class Variant { Backhaul, NoBackhaul, PreemptiveLowerBound };

std::string to_string(Variant v);

struct IlpVariable {
  std::string name;
  bool binary = false;
  long long lb = 0;
  long long ub = -1;  // -1: unbounded above
};

struct LinTerm {
  long long coef;
  int var;
};

enum class RowSense { LE, GE, EQ };

struct IlpRow {
  std::string name;
  std::vector<LinTerm> terms;
  RowSense sense = RowSense::EQ;
  long long rhs = 0;
};

/// Values per model variable; all arithmetic exact in integers.
struct FlowSolution {
  std::vector<long long> value;
  long long objective = 0;
};

/// Coupled car/driver flow model on the time-expanded network.
///
/// Variables (driver index i, node ids v/v', times t/t'):
///   F_i_v_t_v'_t'  driver flow on arc (v,t)->(v',t'), binary
///   f_i_v_t_v'_t'  car flow on a relocation arc, integer >= 0
///   fh_v_t         aggregate car flow on the station holdover arc
///                  (v,t)->(v,t+1), integer >= 0
/// The PreemptiveLowerBound variant aggregates all drivers into one flow
/// (i = 0) with capacity k per arc and keeps only conservation and
/// source/sink balances; its objective is a lower bound and is never
/// decoded into a schedule.
struct IlpModel {
  Variant variant = Variant::Backhaul;
  int drivers = 0;  // flow count: k, or 1 when aggregated

  std::vector<IlpVariable> vars;
  std::vector<IlpRow> rows;
  std::vector<LinTerm> objective;

  // Variable lookup tables; -1 where a variable does not exist.
  std::vector<int> F_var;   // [driver * arcs + arc]
  std::vector<int> f_var;   // [driver * arcs + arc], relocation arcs only
  std::vector<int> fh_var;  // [v * T + t], stations only
  size_t arc_count = 0;
  long long T = 0;

  int F(int driver, int arc) const { return F_var[driver * arc_count + arc]; }
  int f(int driver, int arc) const { return f_var[driver * arc_count + arc]; }
  int fh(int v, long long t) const {
    return T == 0 ? -1 : fh_var[v * T + t];
  }

  long long objective_value(const std::vector<long long>& x) const;

  /// Exact integer check of every bound and row; returns the violated
  /// row/variable names (empty means the solution is feasible).
  std::vector<std::string> check(const FlowSolution& sol) const;
};

IlpModel build_ilp(const TimeExpandedNetwork& ten, const Instance& inst,
                   Variant variant);

/// Writes the model in LP text format (Minimize / Subject To / Bounds /
/// Generals / Binaries / End). Integer coefficients only. Throws
/// SinkWriteError on stream failure.
void export_lp(const IlpModel& model, std::ostream& sink);

/// Encodes a non-preemptive schedule as flows of the given model.
/// Tours must be wait-free except for final depot idling.
FlowSolution encode_flows(const Schedule& s, const IlpModel& model,
                          const TimeExpandedNetwork& ten, const Instance& inst);

/// Rebuilds the schedule from a Backhaul/NoBackhaul flow solution: per
/// driver, the relocation-arc path becomes moves with load f_i, load
/// differences become actions, idle spans become waiting moves. Throws
/// MalformedFlowError if a driver flow is not a single depot-to-depot path.
Schedule decode_schedule(const FlowSolution& sol, const IlpModel& model,
                         const TimeExpandedNetwork& ten, const Instance& inst);

}  // namespace relo
