#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <random>

#include "helpers.hpp"
#include "relocation/io.hpp"

using namespace relo;

namespace {

/// Independent all-pairs reference: Dijkstra from every source.
std::vector<long long> dijkstra_all_pairs(const Network& net) {
  const int n = net.node_count();
  std::vector<long long> dist(static_cast<size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    std::priority_queue<std::pair<long long, int>,
                        std::vector<std::pair<long long, int>>,
                        std::greater<>>
        pq;
    std::vector<long long> d(n, -1);
    d[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du != d[u]) continue;
      for (const Arc& a : net.arcs)
        if (a.from == u && (d[a.to] < 0 || du + a.w < d[a.to])) {
          d[a.to] = du + a.w;
          pq.push({d[a.to], a.to});
        }
    }
    for (int v = 0; v < n; ++v) dist[s * n + v] = d[v];
  }
  return dist;
}

Network random_connected_network(std::mt19937_64& rng, int n) {
  Network net;
  for (int v = 0; v < n - 1; ++v)
    net.add_station("s" + std::to_string(v), 10);
  net.add_depot("d0");
  for (int v = 1; v < n; ++v) {  // random spanning arborescence, both ways
    const int u = static_cast<int>(rng() % v);
    net.add_arc(u, v, 1 + static_cast<long long>(rng() % 9));
    net.add_arc(v, u, 1 + static_cast<long long>(rng() % 9));
  }
  for (int e = 0; e < n; ++e) {
    const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u != v) net.add_arc(u, v, 1 + static_cast<long long>(rng() % 9));
  }
  return net;
}

}  // namespace

TEST_CASE("metric closure equals an independent all-pairs computation") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 50; ++it) {
    const Network net = random_connected_network(rng, 2 + (int)(rng() % 6));
    const QuasiMetric m = metric_closure(net);
    const std::vector<long long> ref = dijkstra_all_pairs(net);
    for (int u = 0; u < net.node_count(); ++u)
      for (int v = 0; v < net.node_count(); ++v)
        CHECK(m(u, v) == ref[u * net.node_count() + v]);
    CHECK_NOTHROW(m.check_axioms());
  }
}

TEST_CASE("metric closure rejects unreachable pairs") {
  Network net;
  net.add_station("s0", 5);
  net.add_station("s1", 5);
  net.add_arc(0, 1, 3);  // no way back
  CHECK_THROWS_AS(metric_closure(net), UnreachablePairError);
}

TEST_CASE("network validation") {
  Network net;
  net.add_station("s0", 5);
  net.add_depot("d0");
  net.add_arc(0, 1, 2);
  net.add_arc(1, 0, 2);
  CHECK_NOTHROW(net.validate());
  net.add_arc(0, 0, 1);
  CHECK_THROWS_AS(net.validate(), Error);  // self loop
}

TEST_CASE("station classification and task derivation") {
  const Instance inst = testutil::uniform_example_instance();
  const StationClasses cls =
      classify_stations(inst.network, inst.z0, inst.zT);
  CHECK(cls.overfull == std::vector<int>{1});        // b
  CHECK(cls.underfull == std::vector<int>{0, 2});    // a, d
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  REQUIRE(tasks.size() == 3);
  CHECK(tasks[0] == Task{0, -1});
  CHECK(tasks[1] == Task{1, 2});
  CHECK(tasks[2] == Task{2, -1});

  SystemState bad = inst.zT;
  bad[0] += 1;  // breaks fleet conservation
  CHECK_THROWS_AS(derive_tasks(inst.network, inst.z0, bad),
                  FleetMismatchError);
}

TEST_CASE("tour length of the worked example is 11") {
  const Instance inst = testutil::uniform_example_instance();
  const Tour t = testutil::uniform_example_tour();
  CHECK(tour_length(t, inst.metric) == 11);
  Schedule s;
  s.tours.push_back(t);
  CHECK(total_tour_length(s, inst.metric) == 11);
}

TEST_CASE("the worked example tour validates and reaches the target state") {
  const Instance inst = testutil::uniform_example_instance();
  Schedule s;
  s.tours.push_back(testutil::uniform_example_tour());
  const ValidationReport rep = validate_schedule(s, inst);
  CHECK(rep.ok());
  const SimulationResult sim = simulate_states(s, inst);
  REQUIRE(sim.feasible());
  CHECK(sim.trajectory.back().z[0] == inst.zT[0]);
  CHECK(sim.trajectory.back().z[1] == inst.zT[1]);
  CHECK(sim.trajectory.back().z[2] == inst.zT[2]);
}

TEST_CASE("validation catches structural violations") {
  const Instance inst = testutil::uniform_example_instance();

  auto has = [](const ValidationReport& r, ViolationKind k) {
    for (const Violation& v : r.violations)
      if (v.kind == k) return true;
    return false;
  };

  SUBCASE("broken load chain") {
    Schedule s;
    Tour t = testutil::uniform_example_tour();
    t.moves[1].load = 1;  // action picked 2
    s.tours.push_back(t);
    const ValidationReport rep = validate_schedule(s, inst);
    CHECK_FALSE(rep.ok());
    CHECK(has(rep, ViolationKind::LoadChain));
  }

  SUBCASE("pickup at an underfull station is preemptive") {
    Schedule s;
    Tour t = testutil::uniform_example_tour();
    t.actions[1].dx = 1;  // picks at d instead of dropping
    s.tours.push_back(t);
    const ValidationReport rep = validate_schedule(s, inst);
    CHECK_FALSE(rep.ok());
    CHECK(has(rep, ViolationKind::PreemptionPickup));
  }

  SUBCASE("overloaded move") {
    Schedule s;
    Tour t = testutil::uniform_example_tour();
    t.actions[0].dx = 3;
    t.moves[1].load = 3;
    t.actions[1].dx = -2;
    t.moves[2].load = 1;
    s.tours.push_back(t);
    const ValidationReport rep = validate_schedule(s, inst);
    CHECK_FALSE(rep.ok());
    CHECK(has(rep, ViolationKind::LoadBound));
  }

  SUBCASE("missing driver") {
    Schedule s;  // no tours at all
    const ValidationReport rep = validate_schedule(s, inst);
    CHECK_FALSE(rep.ok());
    CHECK(has(rep, ViolationKind::TourCount));
  }

  SUBCASE("unserved task") {
    Schedule s;
    s.tours.push_back(empty_tour(0, 3));
    const ValidationReport rep = validate_schedule(s, inst);
    CHECK_FALSE(rep.ok());
    CHECK(has(rep, ViolationKind::TaskNotServed));
  }
}

TEST_CASE("driver depot assignment consumes counts in depot order") {
  Instance inst = testutil::example5_instance();
  inst.k = 3;
  inst.zd = {{4, 2}, {5, 1}};
  CHECK(inst.driver_depots() == std::vector<int>{4, 4, 5});
}

TEST_CASE("simulation nets simultaneous deltas at a station") {
  // At t=4 one driver picks 2 cars at b while another drops 3 there; the
  // netted delta (+1 on a stock of 2, capacity 4) stays feasible even though
  // applying the drop alone first would overflow the station.
  Instance two = testutil::uniform_example_instance();
  two.k = 2;
  two.zd = {{3, 2}};
  Tour t2;
  t2.driver = 1;
  t2.depot = 3;
  t2.moves = {Move{1, 3, 0, 1, 4, 3}, Move{1, 1, 4, 3, 8, 0}};
  t2.actions = {Action{1, 1, 4, -3}};
  Schedule s;
  s.tours = {testutil::uniform_example_tour(), t2};
  const SimulationResult sim = simulate_states(s, two);
  CHECK(sim.feasible());
}
