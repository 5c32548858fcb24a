#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace relo;

namespace {

std::vector<TransportRequest> requests_of(const Instance& inst) {
  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  if (tasks.empty()) return {};
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  return matching_to_requests(bi, min_cost_perfect_p_matching(bi));
}

long long served_total(const Schedule& s) {
  long long tot = 0;
  for (const Tour& t : s.tours)
    for (const Served& sv : t.served) tot += sv.y;
  return tot;
}

/// Exhaustive reference for best_insertion: tries every slot pair and every
/// load via insert_request and keeps the minimum cost-per-car.
std::optional<InsertionCandidate> brute_best_insertion(
    const Tour& tour, const TransportRequest& tr, const Instance& inst) {
  std::optional<InsertionCandidate> best;
  const int m = static_cast<int>(tour.moves.size());
  for (int ps = 0; ps < m; ++ps)
    for (int ds = ps; ds < m; ++ds)
      for (long long y = std::min<long long>(tr.x, inst.L); y >= 1; --y) {
        try {
          const Tour nt = insert_request(tour, tr, ps, ds, y, inst);
          InsertionCandidate c;
          c.tour = tour.driver;
          c.pickup_slot = ps;
          c.drop_slot = ds;
          c.y = y;
          c.delta_len =
              tour_length(nt, inst.metric) - tour_length(tour, inst.metric);
          c.cm = Rational{c.delta_len, y};
          if (!best || c.cm < best->cm) best = c;
        } catch (const Error&) {
          continue;  // smaller loads may still fit
        }
        break;  // only the maximal feasible load per slot pair competes
      }
  return best;
}

}  // namespace

TEST_CASE("insert then remove restores the tour length") {
  const Instance inst = testutil::uniform_example_instance();
  Tour t = empty_tour(0, 3);
  const TransportRequest tr{1, 0, 2};  // two cars b -> a
  const auto cand = best_insertion(t, tr, inst);
  REQUIRE(cand.has_value());
  const Tour with =
      insert_request(t, tr, cand->pickup_slot, cand->drop_slot, cand->y, inst);
  CHECK(tour_length(with, inst.metric) == cand->delta_len);
  REQUIRE(with.served.size() == 1);
  CHECK(with.served[0].origin == 1);
  CHECK(with.served[0].destination == 0);
  CHECK(with.served[0].y == 2);
  const Tour back = remove_request(with, tr, inst);
  CHECK(tour_length(back, inst.metric) == 0);
  CHECK(back.served.empty());
}

TEST_CASE("marginal cost matches its definition") {
  const Instance inst = testutil::uniform_example_instance();
  Tour t = empty_tour(0, 3);
  const TransportRequest r1{1, 0, 1};
  const TransportRequest r2{1, 2, 1};
  auto c1 = best_insertion(t, r1, inst);
  REQUIRE(c1.has_value());
  t = insert_request(t, r1, c1->pickup_slot, c1->drop_slot, c1->y, inst);
  auto c2 = best_insertion(t, r2, inst);
  REQUIRE(c2.has_value());
  t = insert_request(t, r2, c2->pickup_slot, c2->drop_slot, c2->y, inst);

  for (const TransportRequest& tr : {r1, r2}) {
    const long long len = tour_length(t, inst.metric);
    const long long without =
        tour_length(remove_request(t, tr, inst), inst.metric);
    CHECK(marginal_cost(t, tr, inst) == Rational{len - without, tr.x});
  }
}

TEST_CASE("best insertion is minimal over all slot pairs") {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    const Instance inst =
        testutil::random_small_instance(rng, 5, 1, 100000, 1, 3, 20);
    const std::vector<TransportRequest> trs = requests_of(inst);
    if (trs.empty()) continue;
    Tour t = empty_tour(0, inst.driver_depots()[0]);
    for (const TransportRequest& tr : trs) {
      const auto fast = best_insertion(t, tr, inst);
      const auto brute = brute_best_insertion(t, tr, inst);
      REQUIRE(fast.has_value() == brute.has_value());
      if (!fast) break;
      CHECK(fast->cm == brute->cm);
      const Tour nt = insert_request(t, tr, fast->pickup_slot,
                                     fast->drop_slot, fast->y, inst);
      CHECK(tour_length(nt, inst.metric) - tour_length(t, inst.metric) ==
            fast->delta_len);
      t = nt;
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("pdp_insert produces a valid schedule serving every request") {
  std::mt19937_64 rng(23);
  int done = 0;
  for (int it = 0; it < 40; ++it) {
    const Instance inst =
        testutil::random_small_instance(rng, 6, 2, 100000, 2, 3, 20);
    const std::vector<TransportRequest> trs = requests_of(inst);
    long long want = 0;
    for (const TransportRequest& tr : trs) want += tr.x;
    Schedule s;
    try {
      s = pdp_insert(inst, trs, 5);
    } catch (const NoFeasibleInsertionError&) {
      continue;
    }
    CHECK(validate_schedule(s, inst).ok());
    CHECK(served_total(s) == want);
    ++done;
  }
  CHECK(done > 25);
}

TEST_CASE("withdraw and rematch keep the schedule consistent") {
  const Instance inst = testutil::example5_instance();
  const std::vector<TransportRequest> trs = requests_of(inst);
  const Schedule s = pdp_insert(inst, trs, 0);
  CHECK(validate_schedule(s, inst).ok());

  auto [stripped, withdrawn] = withdraw_worst(s, 1, inst);
  REQUIRE(withdrawn.size() == 1);
  CHECK(served_total(stripped) == served_total(s) - withdrawn[0].x);
  for (const Tour& t : stripped.tours)
    CHECK(tour_length(t, inst.metric) <= 1000);

  const std::vector<TransportRequest> re = rematch(stripped, withdrawn, inst);
  long long before = 0, after = 0;
  for (const TransportRequest& tr : withdrawn) before += tr.x;
  for (const TransportRequest& tr : re) after += tr.x;
  CHECK(before == after);
}

TEST_CASE("reopt is valid, deterministic and no worse than plain insertion") {
  std::mt19937_64 rng(29);
  int done = 0;
  for (int it = 0; it < 25; ++it) {
    const Instance inst =
        testutil::random_small_instance(rng, 5, 2, 100000, 2, 2, 15);
    const std::vector<TransportRequest> trs = requests_of(inst);
    Schedule base;
    try {
      base = pdp_insert(inst, trs, 3);
    } catch (const NoFeasibleInsertionError&) {
      continue;
    }
    ReoptParams rp;
    rp.N = 2;
    rp.Delta = 3;
    rp.seed = 3;
    Schedule a, b;
    try {
      a = reopt(inst, rp);
      b = reopt(inst, rp);
    } catch (const NoFeasibleInsertionError&) {
      continue;
    }
    CHECK(validate_schedule(a, inst).ok());
    CHECK(total_tour_length(a, inst.metric) ==
          total_tour_length(b, inst.metric));
    CHECK(total_tour_length(a, inst.metric) <=
          total_tour_length(base, inst.metric));
    ++done;
  }
  CHECK(done > 15);
}

TEST_CASE("insertion failure modes") {
  Instance inst = testutil::uniform_example_instance();
  Tour t = empty_tour(0, 3);

  SUBCASE("capacity") {
    CHECK_THROWS_AS(insert_request(t, TransportRequest{1, 0, 3}, 0, 0, 3, inst),
                    CapacityExceededError);
  }
  SUBCASE("horizon") {
    inst.T = 5;  // b -> a alone needs 4 + depot legs
    CHECK_THROWS_AS(insert_request(t, TransportRequest{1, 0, 1}, 0, 0, 1, inst),
                    HorizonExceededError);
  }
  SUBCASE("not served") {
    CHECK_THROWS_AS(remove_request(t, TransportRequest{1, 0, 1}, inst),
                    NotServedError);
  }
}
