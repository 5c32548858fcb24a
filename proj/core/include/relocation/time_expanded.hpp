#pragma once

#include <vector>

#include "relocation/network.hpp"

namespace relo {

/// Arc of the time-expanded network: either a holdover arc
/// (v,t) -> (v,t+1) or a relocation arc (v,t) -> (v',t+d(v,v')).
struct TenArc {
  int from = -1;
  long long t_from = 0;
  int to = -1;
  long long t_to = 0;
  long long w = 0;  // travel distance; 0 for holdover arcs
  bool relocation = false;
};

/// Acyclic layered network over nodes (v, t), v in V ∪ V_D, t in 0..T.
/// Relocation arcs connect every ordered node pair at metric distance, so
/// each arc's time span equals d(v,v') and decoded moves are tight.
struct TimeExpandedNetwork {
  int n = 0;        // nodes of the underlying network
  long long T = 0;  // time horizon

  std::vector<TenArc> arcs;
  // Arc indices by endpoint, indexed [v * (T+1) + t].
  std::vector<std::vector<int>> out, in;

  int layer(int v, long long t) const {
    return static_cast<int>(v * (T + 1) + t);
  }
  const std::vector<int>& out_arcs(int v, long long t) const {
    return out[layer(v, t)];
  }
  const std::vector<int>& in_arcs(int v, long long t) const {
    return in[layer(v, t)];
  }
  /// Index of the holdover arc (v,t) -> (v,t+1), or -1.
  int holdover(int v, long long t) const;
};

TimeExpandedNetwork build_time_expanded(const Instance& inst);

}  // namespace relo
