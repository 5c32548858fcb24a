#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "relocation/generator.hpp"
#include "relocation/heuristic.hpp"
#include "relocation/matching.hpp"
#include "relocation/solver.hpp"

namespace testutil {

using namespace relo;

/// Two-depot asymmetric counterexample: stations a..d, one driver of
/// capacity 1, pickups at a and c, drops at b and d, all unlisted arcs of
/// length x = 100.
inline Instance example5_instance() {
  Instance inst;
  const int a = inst.network.add_station("a", 2);
  const int b = inst.network.add_station("b", 2);
  const int c = inst.network.add_station("c", 2);
  const int d = inst.network.add_station("d", 2);
  const int vD1 = inst.network.add_depot("vD1");
  const int vD2 = inst.network.add_depot("vD2");
  std::map<std::pair<int, int>, long long> w = {
      {{vD1, a}, 1}, {{b, c}, 1}, {{d, vD2}, 1}, {{vD1, vD2}, 1},
      {{a, b}, 2},   {{c, d}, 2}, {{c, b}, 1},   {{a, d}, 1}};
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) {
      if (u == v) continue;
      auto it = w.find({u, v});
      inst.network.add_arc(u, v, it == w.end() ? 100 : it->second);
    }
  inst.z0 = {1, 0, 1, 0, 0, 0};
  inst.zT = {0, 1, 0, 1, 0, 0};
  inst.T = 1000;
  inst.L = 1;
  inst.k = 1;
  inst.zd = {{vD1, 1}};
  inst.backhaul = false;
  inst.rebuild_metric();
  inst.validate();
  return inst;
}

/// Single-depot network behind the worked uniform-tour example: one driver
/// picks two cars at b and distributes them to d and a.
inline Instance uniform_example_instance() {
  Instance inst;
  const int a = inst.network.add_station("a", 4);
  const int b = inst.network.add_station("b", 4);
  const int d = inst.network.add_station("d", 4);
  const int vD = inst.network.add_depot("vD");
  auto both = [&](int u, int v, long long w) {
    inst.network.add_arc(u, v, w);
    inst.network.add_arc(v, u, w);
  };
  both(vD, b, 4);
  both(b, d, 2);
  both(d, a, 2);
  both(a, vD, 3);
  inst.z0 = {0, 2, 0, 0};
  inst.zT = {1, 0, 1, 0};
  inst.T = 100;
  inst.L = 2;
  inst.k = 1;
  inst.zd = {{vD, 1}};
  inst.backhaul = true;
  inst.rebuild_metric();
  inst.validate();
  return inst;
}

/// The worked example tour on uniform_example_instance: pick two cars at b,
/// drop one at d and one at a. Length 11.
inline Tour uniform_example_tour() {
  const int a = 0, b = 1, d = 2, vD = 3;
  Tour t;
  t.driver = 0;
  t.depot = vD;
  t.moves = {Move{0, vD, 0, b, 4, 0}, Move{0, b, 4, d, 6, 2},
             Move{0, d, 6, a, 8, 1}, Move{0, a, 8, vD, 11, 0}};
  t.actions = {Action{0, b, 4, 2}, Action{0, d, 6, -1}, Action{0, a, 8, -1}};
  return t;
}

/// Exhaustive minimum cost of a perfect p-matching: assigns supply units one
/// by one to every right node with remaining demand.
inline long long brute_matching_cost(const BipartiteInstance& bi) {
  std::vector<int> unit_left;
  for (size_t i = 0; i < bi.left.size(); ++i)
    for (long long u = 0; u < bi.pl[i]; ++u)
      unit_left.push_back(static_cast<int>(i));
  std::vector<long long> rem(bi.pr);
  std::function<long long(size_t)> go = [&](size_t u) -> long long {
    if (u == unit_left.size()) return 0;
    long long best = -1;
    for (size_t j = 0; j < bi.right.size(); ++j) {
      if (rem[j] == 0) continue;
      --rem[j];
      const long long sub = go(u + 1);
      ++rem[j];
      if (sub >= 0) {
        const long long c = bi.weight(unit_left[u], static_cast<int>(j)) + sub;
        if (best < 0 || c < best) best = c;
      }
    }
    return best;
  };
  return go(0);  // -1 when no perfect p-matching exists
}

struct OracleResult {
  bool feasible = false;
  long long cost = 0;
};

/// Independent exact reference: memoized exhaustive search over sequential
/// driver walks with explicit waiting, unit-free pickup/drop amounts at
/// imbalanced stations, and depot retirement rules per variant.
class ExactOracle {
 public:
  ExactOracle(const Instance& inst, bool backhaul)
      : inst_(inst), backhaul_(backhaul), depots_(inst.driver_depots()) {
    const StationClasses cls =
        classify_stations(inst.network, inst.z0, inst.zT);
    for (int v : cls.overfull) {
      slot_[v] = static_cast<int>(need_.size());
      over_.push_back(v);
      need_.push_back(inst.z0[v] - inst.zT[v]);
    }
    for (int v : cls.underfull) {
      slot_[v] = static_cast<int>(need_.size());
      under_.push_back(v);
      need_.push_back(inst.zT[v] - inst.z0[v]);
    }
  }

  OracleResult solve() {
    const long long c = best(0, depots_.empty() ? 0 : depots_[0], 0, 0, need_);
    if (c >= kInf) return {false, 0};
    return {true, c};
  }

 private:
  static constexpr long long kInf = 1LL << 60;

  using Key = std::tuple<int, int, long long, long long, std::vector<long long>>;

  long long best(int driver, int node, long long t, long long load,
                 std::vector<long long> rem) {
    if (driver == inst_.k) {
      for (long long r : rem)
        if (r != 0) return kInf;
      return 0;
    }
    Key key{driver, node, t, load, rem};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    memo_[key] = kInf;  // cycle guard for the zero-cost action transitions

    long long r = kInf;
    // Retire and hand over to the next driver.
    if (load == 0 && inst_.network.depot[node] &&
        (!backhaul_ || node == depots_[driver])) {
      const int nd = driver + 1;
      r = std::min(r, best(nd, nd < inst_.k ? depots_[nd] : 0, 0, 0, rem));
    }
    // Wait one time unit.
    if (t + 1 <= inst_.T)
      r = std::min(r, best(driver, node, t + 1, load, rem));
    // Pick up or drop cars at the current station.
    auto slot = slot_.find(node);
    if (slot != slot_.end()) {
      const bool overfull =
          std::find(over_.begin(), over_.end(), node) != over_.end();
      if (overfull) {
        const long long most = std::min<long long>(rem[slot->second],
                                                   inst_.L - load);
        for (long long x = 1; x <= most; ++x) {
          std::vector<long long> nr = rem;
          nr[slot->second] -= x;
          r = std::min(r, best(driver, node, t, load + x, nr));
        }
      } else {
        const long long most = std::min<long long>(rem[slot->second], load);
        for (long long x = 1; x <= most; ++x) {
          std::vector<long long> nr = rem;
          nr[slot->second] -= x;
          r = std::min(r, best(driver, node, t, load - x, nr));
        }
      }
    }
    // Move to any other node.
    for (int w = 0; w < inst_.network.node_count(); ++w) {
      if (w == node) continue;
      const long long d = inst_.metric(node, w);
      if (t + d > inst_.T) continue;
      const long long sub = best(driver, w, t + d, load, rem);
      if (sub < kInf) r = std::min(r, d + sub);
    }
    memo_[key] = r;
    return r;
  }

  const Instance& inst_;
  bool backhaul_;
  std::vector<int> depots_;
  std::vector<int> over_, under_;
  std::vector<long long> need_;
  std::map<int, int> slot_;
  std::map<Key, long long> memo_;
};

inline OracleResult oracle_exact(const Instance& inst, bool backhaul) {
  return ExactOracle(inst, backhaul).solve();
}

/// Small random instance for suite checks; never throws for any rng state.
inline Instance random_small_instance(std::mt19937_64& rng, int max_stations,
                                      int max_depots, long long T, int max_k,
                                      int max_L, int plane,
                                      bool force_symmetric = false) {
  GeneratorParams gp;
  gp.stations = 2 + static_cast<int>(rng() % (max_stations - 1));
  gp.imbalanced = 2 * static_cast<int>(rng() % (gp.stations / 2 + 1));
  gp.depots = 1 + static_cast<int>(rng() % max_depots);
  gp.k = 1 + static_cast<int>(rng() % max_k);
  gp.L = 1 + static_cast<int>(rng() % max_L);
  gp.T = T;
  gp.plane = plane;
  gp.max_surplus = 2;
  gp.symmetric = force_symmetric || rng() % 2 == 0;
  gp.seed = rng();
  return generate_instance(gp);
}

}  // namespace testutil
