#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relocation/schedule.hpp"

namespace relo {

/// Splits every multi-car action of `tour` into unit actions separated by
/// zero-duration waiting moves. Length-preserving, idempotent, unique.
Tour uniformize_tour(const Tour& tour);

/// Longest runs of consecutive pickup and drop actions (empty actions break
/// runs). For every valid uniform tour both runs are bounded by L.
std::pair<int, int> max_consecutive_actions(const Tour& tour);

enum class TourNodeKind { Depot, Pickup, Drop, Empty };

struct TourGraphNode {
  TourNodeKind kind = TourNodeKind::Depot;
  int station = -1;
  long long time = 0;     // action time (tour start time for the sentinel)
  int action_index = -1;  // index into tour.actions; -1 for the sentinel
};

struct TourGraphArc {
  int from = -1;
  int to = -1;
  long long w = 0;      // distance of the corresponding move (0 for waits)
  int move_index = -1;  // corresponding move in the source tour
};

/// Cycle graph of a tour: one node per action plus a depot sentinel carrying
/// an explicit empty action, one arc per move, closing through the sentinel.
struct TourGraph {
  std::vector<TourGraphNode> nodes;  // nodes[0] is the depot sentinel
  std::vector<TourGraphArc> arcs;    // arcs[i] corresponds to moves[i]
  int depot_node = 0;

  long long weight_sum() const;
};

TourGraph build_tour_graph(const Tour& tour, const QuasiMetric& d);

struct TransportArc {
  int from = -1;  // pickup node
  int to = -1;    // drop node
  long long w = 0;
  int request = -1;  // index into the request list (one arc per unit)
};

/// Tour graph extended with one arc per uniform transport request, from its
/// assigned pickup node to its assigned drop node.
struct TransportGraph {
  TourGraph graph;
  std::vector<TransportArc> transport;
};

/// Assigns each request unit the first unassigned pickup node at its origin
/// and the first unassigned drop node at its destination.
/// Throws UnlocatedRequestError if some unit cannot be placed.
TransportGraph build_transport_graph(const TourGraph& g,
                                     const std::vector<TransportRequest>& trs,
                                     const QuasiMetric& d);

/// Number of traversals of each tour arc recorded while constructing a tour.
struct TraverseCounter {
  std::vector<long long> count;  // indexed like TourGraph::arcs
};

/// Per-arc convoy loads of the source tour (the t function of the step
/// checks): transported(i) = moves[i].load.
std::vector<long long> transported_counts(const Tour& tour);

/// Rebuilds a tour from the transport graph of `tour` and `requests`:
/// starting at `start_node`, repeatedly serve the first unvisited pickup node
/// by following its transport arc, otherwise follow the tour arc; finally
/// follow tour arcs back to the start. Returns the new tour together with the
/// traverse counter of the tour arcs.
std::pair<Tour, TraverseCounter> construct_tour_alg2(
    const Tour& tour, const std::vector<TransportRequest>& requests,
    const QuasiMetric& d, int start_node = 0);

/// Checks the step laws of a traverse counter against the tour graph and the
/// source tour's per-arc loads: across a pickup node the count drops by one
/// and across a drop node it rises by one; count + load is constant over all
/// arcs; the depot-incident arcs carry the maximum (strictly above every arc
/// leaving a pickup node). Returns one message per violated law.
std::vector<std::string> traverse_step_deltas(
    const TraverseCounter& f, const TourGraph& g,
    const std::vector<long long>& transported);

/// Pairs the i-th pickup station with the i-th drop station of a uniform
/// tour, one unit request each. Throws OddActionParityError when pickup and
/// drop counts differ.
std::vector<TransportRequest> close_distance_requests(const Tour& tour);

/// Concatenates all tours of a single-depot schedule into one tour, replacing
/// intermediate depot round trips by direct moves. The result serves the same
/// actions and is never longer than the schedule. Throws MultipleDepotsError.
Tour merge_tours_single_depot(const Schedule& s, const Instance& inst);

/// Tours as nodes, inter-tour transport requests as arcs.
struct TourConnectionGraph {
  struct ConnArc {
    int from = -1;  // tour holding the pickup action
    int to = -1;    // tour holding the drop action
    int request = -1;
  };
  int tour_count = 0;
  std::vector<ConnArc> arcs;  // loop-free; multi-arcs allowed
};

/// Locates each request unit's pickup and drop action in the schedule (first
/// unused match, tours in order) and keeps the pairs spanning two tours.
/// Throws UnlocatedRequestError if a unit cannot be located.
TourConnectionGraph build_tour_connection_graph(
    const Schedule& s, const std::vector<TransportRequest>& requests);

/// True iff every (weakly) connected component is strongly connected.
bool components_strongly_connected(const TourConnectionGraph& g);

/// Multi-tour rebuild: every driver walks its own tour, serving unvisited
/// pickup nodes by following transport arcs (which may jump into other
/// tours), then returns to a depot along tour arcs. With backhaul input the
/// output has backhaul again and serves all requests.
Schedule construct_schedule_alg3(const Schedule& s,
                                 const std::vector<TransportRequest>& requests,
                                 const QuasiMetric& d);

struct BoundReport {
  bool bounded = true;   // false: no finite factor applies
  long long factor = 0;  // applicable approximation factor (0 if unbounded)
  double ratio = 1.0;    // heuristic length / reference length
  bool pass = true;      // bounded: heuristic <= factor * reference
  std::string regime;
};

/// Evaluates a heuristic/optimal length pair against the approximation factor
/// of the instance's regime: single depot or multi-depot backhaul: L+1;
/// multi-depot symmetric without backhaul: 2(L+1); multi-depot asymmetric
/// without backhaul: unbounded (informational only).
BoundReport check_approximation(const Instance& inst, long long heuristic_len,
                                long long reference_len);

}  // namespace relo
