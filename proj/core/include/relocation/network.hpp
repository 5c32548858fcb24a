#pragma once

#include <map>
#include <string>
#include <vector>

#include "relocation/errors.hpp"

namespace relo {

struct Arc {
  int from = -1;
  int to = -1;
  long long w = 0;

  bool operator==(const Arc&) const = default;
};

/// Directed weighted graph over stations and depots. Node ids are dense
/// integers; external string names live in `names`. Stations hold cars (up to
/// `cap`), depots hold drivers and never cars.
struct Network {
  std::vector<std::string> names;
  std::vector<bool> station;
  std::vector<bool> depot;
  std::vector<long long> cap;  // meaningful for stations only
  std::vector<Arc> arcs;

  int node_count() const { return static_cast<int>(names.size()); }

  int add_station(const std::string& name, long long capacity);
  int add_depot(const std::string& name);
  void add_arc(int from, int to, long long w);

  int index_of(const std::string& name) const;  // -1 if absent

  std::vector<int> stations() const;
  std::vector<int> depots() const;

  /// Checks arc weights >= 1, no self loops, station/depot disjointness and
  /// strong connectivity. Throws Error on violation.
  void validate() const;

  bool strongly_connected() const;
};

/// All-pairs shortest-path distance table. Satisfies non-negativity, identity
/// of indiscernibles and the triangle inequality; symmetry is tracked but not
/// required.
struct QuasiMetric {
  int n = 0;
  std::vector<long long> dist;  // row-major n*n
  bool symmetric = true;

  long long operator()(int a, int b) const { return dist[a * n + b]; }

  /// Throws Error if any quasi-metric axiom fails (exhaustive triple check).
  void check_axioms() const;
};

/// Shortest directed path closure of the network. Throws UnreachablePairError
/// if some ordered pair has no directed path.
QuasiMetric metric_closure(const Network& net);

/// Car count per node; entries for depots are always zero.
using SystemState = std::vector<long long>;

struct Task {
  int station = -1;
  long long x = 0;  // > 0: pickup surplus, < 0: deliver deficit

  bool operator==(const Task&) const = default;
};

struct TransportRequest {
  int origin = -1;
  int destination = -1;
  long long x = 0;

  bool operator==(const TransportRequest&) const = default;
  auto operator<=>(const TransportRequest&) const = default;
};

struct StationClasses {
  std::vector<int> overfull;
  std::vector<int> underfull;
  std::vector<int> balanced;
};

struct Instance {
  Network network;
  QuasiMetric metric;
  SystemState z0;
  SystemState zT;
  long long T = 0;
  int L = 1;
  int k = 1;
  std::map<int, int> zd;  // depot node -> driver count
  bool backhaul = true;

  /// Depot of each driver (index 0..k-1), assigned in nondecreasing depot-id
  /// order consuming zd counts.
  std::vector<int> driver_depots() const;

  void validate() const;

  /// Recomputes the metric from the network (the metric is never trusted from
  /// input files).
  void rebuild_metric() { metric = metric_closure(network); }
};

StationClasses classify_stations(const Network& net, const SystemState& z0,
                                 const SystemState& zT);

/// One task per imbalanced station, in station-id order. Throws
/// FleetMismatchError if the state sums differ.
std::vector<Task> derive_tasks(const Network& net, const SystemState& z0,
                               const SystemState& zT);

}  // namespace relo
