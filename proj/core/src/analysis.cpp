#include <algorithm>
#include <limits>

#include "relocation/analysis.hpp"

namespace relo {

Tour uniformize_tour(const Tour& tour) {
  Tour out;
  out.driver = tour.driver;
  out.depot = tour.depot;
  std::vector<int> first_unit(tour.actions.size(), -1);
  for (size_t i = 0; i < tour.moves.size(); ++i) {
    out.moves.push_back(tour.moves[i]);
    if (i >= tour.actions.size()) break;
    const Action& a = tour.actions[i];
    first_unit[i] = static_cast<int>(out.actions.size());
    const long long n = a.dx < 0 ? -a.dx : a.dx;
    if (n <= 1) {
      out.actions.push_back(a);
      continue;
    }
    const long long unit = a.dx > 0 ? 1 : -1;
    long long load = tour.moves[i].load;
    for (long long u = 0; u < n; ++u) {
      out.actions.push_back(Action{a.driver, a.station, a.time, unit});
      load += unit;
      if (u + 1 < n)
        out.moves.push_back(
            Move{a.driver, a.station, a.time, a.station, a.time, load});
    }
  }
  for (Served sv : tour.served) {
    if (sv.pickup_action >= 0 &&
        sv.pickup_action < static_cast<int>(first_unit.size()))
      sv.pickup_action = first_unit[sv.pickup_action];
    if (sv.drop_action >= 0 &&
        sv.drop_action < static_cast<int>(first_unit.size()))
      sv.drop_action = first_unit[sv.drop_action];
    out.served.push_back(sv);
  }
  return out;
}

std::pair<int, int> max_consecutive_actions(const Tour& tour) {
  int max_up = 0, max_down = 0, up = 0, down = 0;
  for (const Action& a : tour.actions) {
    if (a.dx > 0) {
      ++up;
      down = 0;
    } else if (a.dx < 0) {
      ++down;
      up = 0;
    } else {
      up = down = 0;
    }
    max_up = std::max(max_up, up);
    max_down = std::max(max_down, down);
  }
  return {max_up, max_down};
}

long long TourGraph::weight_sum() const {
  long long s = 0;
  for (const TourGraphArc& a : arcs) s += a.w;
  return s;
}

TourGraph build_tour_graph(const Tour& tour, const QuasiMetric& d) {
  TourGraph g;
  const int m = static_cast<int>(tour.moves.size());
  const int start = tour.moves.front().orig;
  g.nodes.push_back(
      TourGraphNode{TourNodeKind::Depot, start, tour.moves.front().dep, -1});
  for (size_t i = 0; i < tour.actions.size(); ++i) {
    const Action& a = tour.actions[i];
    const TourNodeKind kind = a.dx > 0   ? TourNodeKind::Pickup
                              : a.dx < 0 ? TourNodeKind::Drop
                                         : TourNodeKind::Empty;
    g.nodes.push_back(
        TourGraphNode{kind, a.station, a.time, static_cast<int>(i)});
  }
  for (int i = 0; i < m; ++i) {
    const Move& mv = tour.moves[i];
    g.arcs.push_back(TourGraphArc{i == 0 ? 0 : i, i == m - 1 ? 0 : i + 1,
                                  mv.waiting() ? 0 : d(mv.orig, mv.dest), i});
  }
  return g;
}

std::vector<long long> transported_counts(const Tour& tour) {
  std::vector<long long> t;
  t.reserve(tour.moves.size());
  for (const Move& m : tour.moves) t.push_back(m.load);
  return t;
}

namespace {

/// Assigns each request unit a pickup node at its origin and a drop node at
/// its destination, consuming nodes in order. pick_of/drop_of map request
/// units to node ids.
void assign_requests(const std::vector<TourGraphNode>& nodes,
                     const std::vector<TransportRequest>& trs,
                     std::vector<int>& pick_of, std::vector<int>& drop_of,
                     std::vector<int>& request_of) {
  std::vector<char> used(nodes.size(), 0);
  auto take = [&](TourNodeKind kind, int station) {
    for (size_t v = 0; v < nodes.size(); ++v)
      if (!used[v] && nodes[v].kind == kind && nodes[v].station == station) {
        used[v] = 1;
        return static_cast<int>(v);
      }
    throw UnlocatedRequestError("no free action for a request unit");
  };
  for (size_t r = 0; r < trs.size(); ++r)
    for (long long u = 0; u < trs[r].x; ++u) {
      pick_of.push_back(take(TourNodeKind::Pickup, trs[r].origin));
      drop_of.push_back(take(TourNodeKind::Drop, trs[r].destination));
      request_of.push_back(static_cast<int>(r));
    }
}

}  // namespace

TransportGraph build_transport_graph(const TourGraph& g,
                                     const std::vector<TransportRequest>& trs,
                                     const QuasiMetric& d) {
  TransportGraph tg;
  tg.graph = g;
  std::vector<int> pick, drop, req;
  assign_requests(g.nodes, trs, pick, drop, req);
  for (size_t u = 0; u < pick.size(); ++u)
    tg.transport.push_back(
        TransportArc{pick[u], drop[u],
                     d(g.nodes[pick[u]].station, g.nodes[drop[u]].station),
                     req[u]});
  return tg;
}

namespace {

/// Joint cycle graph over several tours with transport arcs, plus the walk of
/// Algorithms 2/3: serve the first unvisited pickup node via its transport
/// arc, otherwise follow the tour arc; finally close along tour arcs.
struct WalkGraph {
  struct Node {
    int tour;
    TourNodeKind kind;
    int station;
  };
  std::vector<Node> nodes;
  std::vector<int> next;          // tour-arc successor of each node
  std::vector<int> next_arc;      // global id of the tour arc leaving a node
  std::vector<long long> next_w;  // weight of that arc
  std::vector<int> trans_to;      // transport successor or -1
  std::vector<int> depot_node;    // sentinel node of each tour
  int arc_total = 0;
};

WalkGraph build_walk_graph(const std::vector<const Tour*>& tours,
                           const QuasiMetric& d,
                           const std::vector<TransportRequest>& trs) {
  WalkGraph g;
  for (size_t j = 0; j < tours.size(); ++j) {
    const Tour& t = *tours[j];
    const int base = static_cast<int>(g.nodes.size());
    g.depot_node.push_back(base);
    g.nodes.push_back(WalkGraph::Node{static_cast<int>(j), TourNodeKind::Depot,
                                      t.moves.front().orig});
    for (const Action& a : t.actions) {
      const TourNodeKind kind = a.dx > 0   ? TourNodeKind::Pickup
                                : a.dx < 0 ? TourNodeKind::Drop
                                           : TourNodeKind::Empty;
      g.nodes.push_back(
          WalkGraph::Node{static_cast<int>(j), kind, a.station});
    }
    g.next.resize(g.nodes.size());
    g.next_arc.resize(g.nodes.size());
    g.next_w.resize(g.nodes.size());
    const int m = static_cast<int>(t.moves.size());
    for (int i = 0; i < m; ++i) {
      const Move& mv = t.moves[i];
      const int from = base + (i == 0 ? 0 : i);
      const int to = base + (i == m - 1 ? 0 : i + 1);
      g.next[from] = to;
      g.next_arc[from] = g.arc_total++;
      g.next_w[from] = mv.waiting() ? 0 : d(mv.orig, mv.dest);
    }
  }
  g.trans_to.assign(g.nodes.size(), -1);
  std::vector<TourGraphNode> as_nodes;
  for (const auto& n : g.nodes)
    as_nodes.push_back(TourGraphNode{n.kind, n.station, 0, -1});
  std::vector<int> pick, drop, req;
  assign_requests(as_nodes, trs, pick, drop, req);
  for (size_t u = 0; u < pick.size(); ++u) g.trans_to[pick[u]] = drop[u];
  return g;
}

struct Emitter {
  int driver;
  Tour t;
  int cur;
  long long time = 0;
  long long load = 0;

  Emitter(int j, int start_station) : driver(j), cur(start_station) {
    t.driver = j;
  }
  void action(long long dx) {
    if (t.moves.size() == t.actions.size())
      t.moves.push_back(Move{driver, cur, time, cur, time, load});
    t.actions.push_back(Action{driver, cur, time, dx});
    load += dx;
  }
  void move(int to, long long dist) {
    if (!t.moves.empty() && t.moves.size() == t.actions.size() + 1)
      t.actions.push_back(Action{driver, cur, time, 0});
    t.moves.push_back(Move{driver, cur, time, to, time + dist, load});
    time += dist;
    cur = to;
  }
  Tour finish(int depot) {
    if (t.moves.empty()) t.moves.push_back(Move{driver, cur, 0, cur, 0, 0});
    t.depot = depot;
    return std::move(t);
  }
};

/// One driver's walk. `close_at` < 0 closes at the depot sentinel of the tour
/// the walk ends in, otherwise at the given node.
void walk(const WalkGraph& g, int start, int close_at,
          std::vector<char>& visited, std::vector<long long>& f,
          const QuasiMetric& d, Emitter& em) {
  long long guard =
      static_cast<long long>(g.nodes.size() + 2) * (g.nodes.size() + 2) +
      1024;
  int cur = start;
  auto has_unvisited = [&](int tour) {
    for (size_t v = 0; v < g.nodes.size(); ++v)
      if (g.nodes[v].tour == tour && g.nodes[v].kind == TourNodeKind::Pickup &&
          g.trans_to[v] >= 0 && !visited[v])
        return true;
    return false;
  };
  auto step = [&] {
    if (--guard < 0) throw Error("tour construction did not terminate");
    ++f[g.next_arc[cur]];
    em.move(g.nodes[g.next[cur]].station, g.next_w[cur]);
    cur = g.next[cur];
  };
  while (has_unvisited(g.nodes[cur].tour)) {
    if (g.nodes[cur].kind == TourNodeKind::Pickup && !visited[cur] &&
        g.trans_to[cur] >= 0) {
      visited[cur] = 1;
      const int to = g.trans_to[cur];
      em.action(1);
      em.move(g.nodes[to].station,
              d(g.nodes[cur].station, g.nodes[to].station));
      em.action(-1);
      cur = to;
    } else {
      step();
    }
  }
  const int target =
      close_at >= 0 ? close_at : g.depot_node[g.nodes[cur].tour];
  if (em.t.moves.empty() && cur == target) {
    do step();
    while (cur != target);  // nothing served: retrace the cycle once
  } else {
    while (cur != target) step();
  }
}

}  // namespace

std::pair<Tour, TraverseCounter> construct_tour_alg2(
    const Tour& tour, const std::vector<TransportRequest>& requests,
    const QuasiMetric& d, int start_node) {
  const WalkGraph g = build_walk_graph({&tour}, d, requests);
  std::vector<char> visited(g.nodes.size(), 0);
  TraverseCounter f;
  f.count.assign(g.arc_total, 0);
  Emitter em(tour.driver, g.nodes[start_node].station);
  walk(g, start_node, start_node, visited, f.count, d, em);
  const int depot =
      tour.depot >= 0 ? tour.depot : tour.moves.front().orig;
  return {em.finish(depot), f};
}

Schedule construct_schedule_alg3(const Schedule& s,
                                 const std::vector<TransportRequest>& requests,
                                 const QuasiMetric& d) {
  std::vector<const Tour*> tours;
  for (const Tour& t : s.tours) tours.push_back(&t);
  const WalkGraph g = build_walk_graph(tours, d, requests);
  std::vector<char> visited(g.nodes.size(), 0);
  std::vector<long long> f(g.arc_total, 0);
  Schedule out;
  for (size_t j = 0; j < tours.size(); ++j) {
    const int start = g.depot_node[j];
    Emitter em(tours[j]->driver, g.nodes[start].station);
    walk(g, start, -1, visited, f, d, em);
    const int depot =
        tours[j]->depot >= 0 ? tours[j]->depot : tours[j]->moves.front().orig;
    out.tours.push_back(em.finish(depot));
  }
  return out;
}

std::vector<std::string> traverse_step_deltas(
    const TraverseCounter& f, const TourGraph& g,
    const std::vector<long long>& transported) {
  std::vector<std::string> viol;
  if (f.count.size() != g.arcs.size() ||
      transported.size() != g.arcs.size()) {
    viol.push_back("size mismatch between counter, graph and loads");
    return viol;
  }
  if (g.arcs.empty()) return viol;

  std::vector<int> out(g.nodes.size(), -1);
  for (size_t a = 0; a < g.arcs.size(); ++a) out[g.arcs[a].from] = (int)a;

  // Step signs across interior nodes.
  for (size_t a1 = 0; a1 < g.arcs.size(); ++a1) {
    const int w = g.arcs[a1].to;
    const int a2 = out[w];
    if (a2 < 0 || a2 == static_cast<int>(a1)) continue;
    const long long diff = f.count[a1] - f.count[a2];
    if (g.nodes[w].kind == TourNodeKind::Pickup && diff != 1)
      viol.push_back("count does not drop by one across pickup node " +
                     std::to_string(w));
    if (g.nodes[w].kind == TourNodeKind::Drop && diff != -1)
      viol.push_back("count does not rise by one across drop node " +
                     std::to_string(w));
  }

  // Constancy of count + load.
  const long long c = f.count[0] + transported[0];
  for (size_t a = 0; a < g.arcs.size(); ++a)
    if (f.count[a] + transported[a] != c) {
      viol.push_back("count + load is not constant over the arcs");
      break;
    }

  // Depot-incident arcs carry the maximum.
  int din = -1, dout = -1;
  for (size_t a = 0; a < g.arcs.size(); ++a) {
    if (g.arcs[a].from == g.depot_node) dout = static_cast<int>(a);
    if (g.arcs[a].to == g.depot_node) din = static_cast<int>(a);
  }
  if (din >= 0 && dout >= 0) {
    if (f.count[din] != f.count[dout])
      viol.push_back("depot in- and out-arc counts differ");
    for (size_t a = 0; a < g.arcs.size(); ++a) {
      if (f.count[a] > f.count[dout])
        viol.push_back("arc " + std::to_string(a) +
                       " exceeds the depot arc count");
      if (g.nodes[g.arcs[a].from].kind == TourNodeKind::Pickup &&
          f.count[a] >= f.count[dout])
        viol.push_back("arc " + std::to_string(a) +
                       " leaving a pickup node reaches the depot arc count");
    }
  }
  return viol;
}

std::vector<TransportRequest> close_distance_requests(const Tour& tour) {
  std::vector<int> picks, drops;
  for (const Action& a : tour.actions) {
    for (long long u = 0; u < a.dx; ++u) picks.push_back(a.station);
    for (long long u = 0; u < -a.dx; ++u) drops.push_back(a.station);
  }
  if (picks.size() != drops.size())
    throw OddActionParityError("pickup and drop unit counts differ");
  std::vector<TransportRequest> trs;
  for (size_t i = 0; i < picks.size(); ++i)
    trs.push_back(TransportRequest{picks[i], drops[i], 1});
  return trs;
}

Tour merge_tours_single_depot(const Schedule& s, const Instance& inst) {
  const std::vector<int> depots = inst.network.depots();
  if (depots.size() != 1)
    throw MultipleDepotsError("tour merging needs a single depot");
  const int vD = depots[0];

  std::vector<const Tour*> active;
  for (const Tour& t : s.tours)
    if (!t.actions.empty()) active.push_back(&t);
  if (active.empty())
    return empty_tour(s.tours.empty() ? 0 : s.tours.front().driver, vD);
  if (active.size() == 1) return *active[0];

  const int j = active.front()->driver;
  Tour out;
  out.driver = j;
  out.depot = vD;
  int cur = vD;
  long long time = 0, load = 0;
  for (const Tour* t : active)
    for (const Action& a : t->actions) {
      const long long dist = inst.metric(cur, a.station);
      out.moves.push_back(Move{j, cur, time, a.station, time + dist, load});
      time += dist;
      out.actions.push_back(Action{j, a.station, time, a.dx});
      load += a.dx;
      cur = a.station;
    }
  const long long dist = inst.metric(cur, vD);
  out.moves.push_back(Move{j, cur, time, vD, time + dist, load});
  return out;
}

TourConnectionGraph build_tour_connection_graph(
    const Schedule& s, const std::vector<TransportRequest>& requests) {
  TourConnectionGraph g;
  g.tour_count = static_cast<int>(s.tours.size());
  std::vector<TourGraphNode> nodes;
  std::vector<int> tour_of;
  for (size_t j = 0; j < s.tours.size(); ++j)
    for (const Action& a : s.tours[j].actions) {
      const TourNodeKind kind = a.dx > 0   ? TourNodeKind::Pickup
                                : a.dx < 0 ? TourNodeKind::Drop
                                           : TourNodeKind::Empty;
      nodes.push_back(TourGraphNode{kind, a.station, a.time, -1});
      tour_of.push_back(static_cast<int>(j));
    }
  std::vector<int> pick, drop, req;
  assign_requests(nodes, requests, pick, drop, req);
  for (size_t u = 0; u < pick.size(); ++u)
    if (tour_of[pick[u]] != tour_of[drop[u]])
      g.arcs.push_back(TourConnectionGraph::ConnArc{tour_of[pick[u]],
                                                    tour_of[drop[u]], req[u]});
  return g;
}

bool components_strongly_connected(const TourConnectionGraph& g) {
  const int n = g.tour_count;
  std::vector<std::vector<int>> fwd(n), both(n);
  for (const auto& a : g.arcs) {
    fwd[a.from].push_back(a.to);
    both[a.from].push_back(a.to);
    both[a.to].push_back(a.from);
  }
  auto reach = [&](const std::vector<std::vector<int>>& adj, int src) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{src};
    seen[src] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return seen;
  };
  for (int v = 0; v < n; ++v) {
    const std::vector<char> comp = reach(both, v);
    const std::vector<char> dir = reach(fwd, v);
    for (int w = 0; w < n; ++w)
      if (comp[w] && !dir[w]) return false;
  }
  return true;
}

BoundReport check_approximation(const Instance& inst, long long heuristic_len,
                                long long reference_len) {
  BoundReport r;
  const size_t depots = inst.network.depots().size();
  if (depots <= 1) {
    r.regime = "single depot";
    r.factor = inst.L + 1;
  } else if (inst.backhaul) {
    r.regime = "multiple depots with backhaul";
    r.factor = inst.L + 1;
  } else if (inst.metric.symmetric) {
    r.regime = "multiple depots, symmetric, no backhaul";
    r.factor = 2LL * (inst.L + 1);
  } else {
    r.regime = "multiple depots, asymmetric, no backhaul";
    r.bounded = false;
    r.factor = 0;
  }
  if (reference_len > 0)
    r.ratio = static_cast<double>(heuristic_len) /
              static_cast<double>(reference_len);
  else
    r.ratio = heuristic_len == 0
                  ? 1.0
                  : std::numeric_limits<double>::infinity();
  r.pass = !r.bounded || heuristic_len <= r.factor * reference_len;
  return r;
}

}  // namespace relo
