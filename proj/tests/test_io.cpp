#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "helpers.hpp"
#include "relocation/io.hpp"

using namespace relo;

namespace {

std::vector<TransportRequest> requests_of(const Instance& inst) {
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  if (tasks.empty()) return {};
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  return matching_to_requests(bi, min_cost_perfect_p_matching(bi));
}

}  // namespace

TEST_CASE("instance round trip is byte-stable") {
  std::mt19937_64 rng(67);
  for (int it = 0; it < 20; ++it) {
    const Instance inst =
        testutil::random_small_instance(rng, 6, 2, 1000, 3, 3, 50);
    const std::string a = write_instance(inst);
    const Instance back = read_instance(a);
    const std::string b = write_instance(back);
    CHECK(a == b);
    CHECK(back.network.node_count() == inst.network.node_count());
    CHECK(back.network.names == inst.network.names);
    CHECK(back.z0 == inst.z0);
    CHECK(back.zT == inst.zT);
    CHECK(back.T == inst.T);
    CHECK(back.L == inst.L);
    CHECK(back.k == inst.k);
    CHECK(back.zd == inst.zd);
    CHECK(back.backhaul == inst.backhaul);
    // The metric is recomputed on read, not deserialized.
    CHECK(back.metric.dist == inst.metric.dist);
  }
}

TEST_CASE("schedule round trip is byte-stable") {
  std::mt19937_64 rng(71);
  int done = 0;
  for (int it = 0; it < 15; ++it) {
    const Instance inst =
        testutil::random_small_instance(rng, 5, 2, 100000, 2, 2, 15);
    Schedule s;
    try {
      s = pdp_insert(inst, requests_of(inst), 9);
    } catch (const NoFeasibleInsertionError&) {
      continue;
    }
    const std::string a = write_schedule(s, inst.network);
    const Schedule back = read_schedule(a, inst.network);
    const std::string b = write_schedule(back, inst.network);
    CHECK(a == b);
    REQUIRE(back.tours.size() == s.tours.size());
    for (size_t i = 0; i < s.tours.size(); ++i)
      CHECK(back.tours[i] == s.tours[i]);
    ++done;
  }
  CHECK(done > 8);
}

TEST_CASE("request list round trip is byte-stable") {
  const Instance inst = testutil::example5_instance();
  const std::vector<TransportRequest> trs = requests_of(inst);
  REQUIRE_FALSE(trs.empty());
  const std::string a = write_requests(trs, inst.network);
  const std::vector<TransportRequest> back =
      read_requests(a, inst.network);
  CHECK(back == trs);
  CHECK(write_requests(back, inst.network) == a);
}

TEST_CASE("file helpers") {
  const std::string path = "io_test_tmp.json";
  const Instance inst = testutil::uniform_example_instance();
  save_file(path, write_instance(inst));
  const Instance back = load_instance(path);
  CHECK(write_instance(back) == write_instance(inst));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_file("definitely_missing_file.json"), Error);
}

TEST_CASE("generator determinism and validity") {
  GeneratorParams gp;
  gp.stations = 12;
  gp.imbalanced = 6;
  gp.depots = 2;
  gp.k = 3;
  gp.L = 2;
  gp.T = 500;
  gp.seed = 99;
  const Instance a = generate_instance(gp);
  const Instance b = generate_instance(gp);
  CHECK(write_instance(a) == write_instance(b));
  CHECK_NOTHROW(a.validate());
  CHECK(a.network.node_count() == 14);
  long long drivers = 0;
  for (const auto& [depot, cnt] : a.zd) drivers += cnt;
  CHECK(drivers == 3);

  gp.seed = 100;
  const Instance c = generate_instance(gp);
  CHECK(write_instance(a) != write_instance(c));

  gp.symmetric = false;
  const Instance d = generate_instance(gp);
  CHECK_FALSE(d.metric.symmetric);
}

TEST_CASE("generator parameter validation") {
  GeneratorParams gp;
  gp.imbalanced = 3;  // must be even
  CHECK_THROWS_AS(generate_instance(gp), ParamConflictError);
  gp.imbalanced = 4;
  gp.stations = 3;  // fewer stations than imbalanced ones
  CHECK_THROWS_AS(generate_instance(gp), ParamConflictError);
}

TEST_CASE("identical seeds reproduce the whole pipeline") {
  GeneratorParams gp;
  gp.stations = 8;
  gp.imbalanced = 4;
  gp.depots = 1;
  gp.k = 2;
  gp.L = 2;
  gp.T = 100000;
  gp.seed = 5;
  const Instance inst = generate_instance(gp);
  ReoptParams rp;
  rp.N = 1;
  rp.Delta = 2;
  rp.seed = 1;
  const Schedule a = reopt(inst, rp);
  const Schedule b = reopt(generate_instance(gp), rp);
  CHECK(write_schedule(a, inst.network) == write_schedule(b, inst.network));
}
