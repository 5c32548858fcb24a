#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "relocation/generator.hpp"

namespace relo {

namespace {

long long euclid(std::pair<int, int> a, std::pair<int, int> b) {
  const double dx = a.first - b.first, dy = a.second - b.second;
  return std::max<long long>(1, std::llround(std::sqrt(dx * dx + dy * dy)));
}

}  // namespace

Instance generate_instance(const GeneratorParams& p) {
  if (p.stations < 1) throw ParamConflictError("need at least one station");
  if (p.depots < 1) throw ParamConflictError("need at least one depot");
  if (p.imbalanced < 0 || p.imbalanced > p.stations)
    throw ParamConflictError("more imbalanced stations than stations");
  if (p.imbalanced % 2 != 0)
    throw ParamConflictError("imbalanced stations cannot split evenly");
  if (p.T < 1) throw ParamConflictError("time horizon must be positive");
  if (p.k < 1) throw ParamConflictError("need at least one driver");
  if (p.L < 1) throw ParamConflictError("convoy capacity must be positive");
  if (p.max_surplus < 1) throw ParamConflictError("max surplus must be >= 1");
  if (p.plane < 1) throw ParamConflictError("plane must be positive");

  std::mt19937_64 rng(p.seed);
  auto pick = [&](long long n) {  // uniform in [0, n)
    return static_cast<long long>(rng() % static_cast<unsigned long long>(n));
  };

  const int n = p.stations + p.depots;
  std::vector<std::pair<int, int>> pos;
  pos.reserve(n);
  for (int v = 0; v < n; ++v)
    pos.push_back({static_cast<int>(pick(p.plane + 1)),
                   static_cast<int>(pick(p.plane + 1))});

  Instance inst;
  inst.T = p.T;
  inst.L = p.L;
  inst.k = p.k;
  inst.backhaul = p.backhaul;

  // Stocks: overfull/underfull stations are paired with equal magnitudes so
  // the fleet is conserved; all other stations keep their stock.
  const int half = p.imbalanced / 2;
  std::vector<long long> z0(n, 0), zT(n, 0), cap(p.stations, 0);
  for (int v = 0; v < p.stations; ++v) {
    const long long base = pick(p.base_stock + 1);
    z0[v] = zT[v] = base;
  }
  for (int i = 0; i < half; ++i) {
    const long long m = 1 + pick(p.max_surplus);
    z0[i] += m;              // overfull: stations 0..half-1
    zT[half + i] += m;       // underfull: stations half..imbalanced-1
  }
  for (int v = 0; v < p.stations; ++v) cap[v] = z0[v] + zT[v] + p.L;

  for (int v = 0; v < p.stations; ++v)
    inst.network.add_station("s" + std::to_string(v), cap[v]);
  for (int i = 0; i < p.depots; ++i)
    inst.network.add_depot("d" + std::to_string(i));

  // Arcs: nearest-neighbour links plus a random spanning tree, both
  // directions; weights are rounded Euclidean distances (optionally
  // perturbed per direction in the asymmetric mode).
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<long long, int>> near;
    for (int w = 0; w < n; ++w)
      if (w != v) near.push_back({euclid(pos[v], pos[w]), w});
    std::sort(near.begin(), near.end());
    const int links = std::min<int>(p.neighbors, static_cast<int>(near.size()));
    for (int i = 0; i < links; ++i)
      edges.insert({std::min(v, near[i].second), std::max(v, near[i].second)});
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  for (int v = n - 1; v > 0; --v)
    std::swap(order[v], order[pick(v + 1)]);
  for (int i = 1; i < n; ++i) {
    const int a = order[i], b = order[pick(i)];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : edges) {
    const long long w = euclid(pos[a], pos[b]);
    long long wab = w, wba = w;
    if (!p.symmetric) {
      wab = std::max<long long>(
          1, std::llround(w * (1.0 + static_cast<double>(pick(21)) / 100.0)));
      wba = std::max<long long>(
          1, std::llround(w * (1.0 + static_cast<double>(pick(21)) / 100.0)));
    }
    inst.network.add_arc(a, b, wab);
    inst.network.add_arc(b, a, wba);
  }

  inst.z0 = z0;
  inst.zT = zT;
  for (int i = 0; i < p.depots; ++i) {
    const int extra = i < p.k % p.depots ? 1 : 0;
    const int cnt = p.k / p.depots + extra;
    if (cnt > 0) inst.zd[p.stations + i] = cnt;
  }
  inst.rebuild_metric();
  inst.validate();
  return inst;
}

}  // namespace relo
