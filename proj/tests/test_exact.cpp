#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "relocation/solver.hpp"

using namespace relo;

namespace {

Instance tiny_instance(std::mt19937_64& rng, bool force_symmetric = false) {
  return testutil::random_small_instance(rng, 4, 2, 8, 2, 2, 3,
                                         force_symmetric);
}

}  // namespace

TEST_CASE("time-expanded network structure") {
  const Instance inst = testutil::uniform_example_instance();
  const TimeExpandedNetwork ten = build_time_expanded(inst);
  CHECK(ten.n == inst.network.node_count());
  CHECK(ten.T == inst.T);
  for (const TenArc& a : ten.arcs) {
    if (a.relocation) {
      CHECK(a.t_to - a.t_from == inst.metric(a.from, a.to));
      CHECK(a.w == inst.metric(a.from, a.to));
    } else {
      CHECK(a.from == a.to);
      CHECK(a.t_to == a.t_from + 1);
      CHECK(a.w == 0);
    }
    CHECK(a.t_from >= 0);
    CHECK(a.t_to <= inst.T);
    CHECK(a.t_to > a.t_from);  // layered, hence acyclic
  }
  // Endpoint indices are consistent.
  for (size_t i = 0; i < ten.arcs.size(); ++i) {
    const TenArc& a = ten.arcs[i];
    const auto& outs = ten.out_arcs(a.from, a.t_from);
    CHECK(std::find(outs.begin(), outs.end(), static_cast<int>(i)) !=
          outs.end());
    const auto& ins = ten.in_arcs(a.to, a.t_to);
    CHECK(std::find(ins.begin(), ins.end(), static_cast<int>(i)) != ins.end());
  }
  // Holdover lookup round-trips.
  for (int v = 0; v < ten.n; ++v)
    for (long long t = 0; t < ten.T; ++t) {
      const int h = ten.holdover(v, t);
      if (inst.network.station[v]) {
        REQUIRE(h >= 0);
        CHECK_FALSE(ten.arcs[h].relocation);
        CHECK(ten.arcs[h].from == v);
        CHECK(ten.arcs[h].t_from == t);
      }
    }
}

TEST_CASE("ilp model structure") {
  Instance inst = testutil::uniform_example_instance();
  inst.T = 15;
  const TimeExpandedNetwork ten = build_time_expanded(inst);
  const IlpModel model = build_ilp(ten, inst, Variant::Backhaul);
  CHECK(model.drivers == inst.k);
  CHECK(model.arc_count == ten.arcs.size());

  // Lookup tables agree with variable kinds; car variables exist exactly on
  // relocation arcs.
  for (int i = 0; i < model.drivers; ++i)
    for (size_t a = 0; a < model.arc_count; ++a) {
      const int Fv = model.F(i, static_cast<int>(a));
      REQUIRE(Fv >= 0);
      CHECK(model.vars[Fv].binary);
      const int fv = model.f(i, static_cast<int>(a));
      CHECK((fv >= 0) == ten.arcs[a].relocation);
      if (fv >= 0) {
        CHECK_FALSE(model.vars[fv].binary);
        CHECK(model.vars[fv].lb == 0);
      }
    }
  // Objective charges driver flow with arc distances.
  long long wsum = 0;
  for (const LinTerm& t : model.objective) {
    CHECK(t.coef > 0);
    wsum += t.coef;
  }
  long long expect = 0;
  for (const TenArc& a : ten.arcs) expect += a.w;
  CHECK(wsum == inst.k * expect);

  // The aggregated relaxation uses a single flow.
  const IlpModel lb = build_ilp(ten, inst, Variant::PreemptiveLowerBound);
  CHECK(lb.drivers == 1);
  const bool no_blowup = lb.vars.size() < model.vars.size() || inst.k == 1;
  CHECK(no_blowup);  // aggregation never enlarges the model
}

TEST_CASE("lp export is well-formed and byte-stable") {
  Instance inst = testutil::uniform_example_instance();
  inst.T = 12;
  const TimeExpandedNetwork ten = build_time_expanded(inst);
  const IlpModel model = build_ilp(ten, inst, Variant::Backhaul);
  std::ostringstream a, b;
  export_lp(model, a);
  export_lp(model, b);
  const std::string text = a.str();
  CHECK(text == b.str());
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("Bounds") != std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.rfind("End") != std::string::npos);
  CHECK(text.find('.') == std::string::npos);  // integer coefficients only
}

TEST_CASE("exact solver matches the exhaustive oracle") {
  std::mt19937_64 rng(31);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int it = 0; it < 30; ++it) {
    const Instance inst = tiny_instance(rng);
    for (const bool backhaul : {true, false}) {
      Instance v = inst;
      v.backhaul = backhaul;
      const testutil::OracleResult ref = testutil::oracle_exact(v, backhaul);
      const SolveResult got = solve_exact(
          v, backhaul ? Variant::Backhaul : Variant::NoBackhaul);
      REQUIRE(got.status != SolveStatus::BudgetExhausted);
      CHECK((got.status == SolveStatus::Optimal) == ref.feasible);
      if (ref.feasible) {
        CHECK(got.objective == ref.cost);
        REQUIRE(got.schedule.has_value());
        CHECK(validate_schedule(*got.schedule, v).ok());
        CHECK(total_tour_length(*got.schedule, v.metric) == got.objective);
        ++feasible_seen;
      } else {
        ++infeasible_seen;
      }
    }
  }
  CHECK(feasible_seen >= 20);  // the suite exercises both outcomes
  CHECK(infeasible_seen >= 1);
}

TEST_CASE("variant ordering: relaxation <= no-backhaul <= backhaul") {
  std::mt19937_64 rng(37);
  int done = 0;
  for (int it = 0; it < 20; ++it) {
    const Instance inst = tiny_instance(rng);
    const SolveResult bh = solve_exact(inst, Variant::Backhaul);
    const SolveResult nb = solve_exact(inst, Variant::NoBackhaul);
    if (bh.status != SolveStatus::Optimal) continue;
    REQUIRE(nb.status == SolveStatus::Optimal);
    CHECK(nb.objective <= bh.objective);
    const long long lb = lower_bound(inst);
    CHECK(lb <= nb.objective);
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("optimal flows decode back into the optimal schedule") {
  std::mt19937_64 rng(41);
  int done = 0;
  for (int it = 0; it < 10 || done < 5; ++it) {
    REQUIRE(it < 40);
    const Instance inst = tiny_instance(rng);
    const TimeExpandedNetwork ten = build_time_expanded(inst);
    const IlpModel model = build_ilp(ten, inst, Variant::Backhaul);
    const SolveResult res = solve_exact_bnb(model, ten, inst);
    if (res.status != SolveStatus::Optimal) continue;
    REQUIRE(res.flow.has_value());
    CHECK(model.check(*res.flow).empty());
    CHECK(res.flow->objective == res.objective);
    CHECK(model.objective_value(res.flow->value) == res.objective);
    const Schedule s = decode_schedule(*res.flow, model, ten, inst);
    CHECK(validate_schedule(s, inst).ok());
    CHECK(total_tour_length(s, inst.metric) == res.objective);
    ++done;
  }
}

TEST_CASE("schedules re-encode as feasible flows of the model") {
  std::mt19937_64 rng(43);
  int done = 0;
  for (int it = 0; it < 10 || done < 5; ++it) {
    REQUIRE(it < 40);
    const Instance inst = tiny_instance(rng);
    const SolveResult res = solve_exact(inst, Variant::Backhaul);
    if (res.status != SolveStatus::Optimal) continue;
    const TimeExpandedNetwork ten = build_time_expanded(inst);
    const IlpModel model = build_ilp(ten, inst, Variant::Backhaul);
    const FlowSolution flow = encode_flows(*res.schedule, model, ten, inst);
    CHECK(model.check(flow).empty());
    CHECK(flow.objective == res.objective);
    ++done;
  }
}

TEST_CASE("budget exhaustion reports a usable bound") {
  const Instance inst = testutil::example5_instance();
  SolveLimits lim;
  lim.node_budget = 1;
  const SolveResult res = solve_exact(inst, Variant::NoBackhaul, lim);
  CHECK(res.status == SolveStatus::BudgetExhausted);
  CHECK(res.bound <= 7);

  const SolveResult full = solve_exact(inst, Variant::NoBackhaul);
  CHECK(full.status == SolveStatus::Optimal);
  CHECK(full.objective == 7);
  CHECK(full.bound == 7);
}

TEST_CASE("horizon too short is reported infeasible") {
  Instance inst = testutil::uniform_example_instance();
  inst.T = 3;  // even reaching b costs 4
  const SolveResult res = solve_exact(inst, Variant::Backhaul);
  CHECK(res.status == SolveStatus::Infeasible);
  const testutil::OracleResult ref = testutil::oracle_exact(inst, true);
  CHECK_FALSE(ref.feasible);
}
