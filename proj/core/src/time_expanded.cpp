#include "relocation/time_expanded.hpp"

namespace relo {

int TimeExpandedNetwork::holdover(int v, long long t) const {
  for (int a : out[layer(v, t)])
    if (!arcs[a].relocation) return a;
  return -1;
}

TimeExpandedNetwork build_time_expanded(const Instance& inst) {
  TimeExpandedNetwork ten;
  ten.n = inst.network.node_count();
  ten.T = inst.T;
  const long long layers = ten.T + 1;
  ten.out.assign(static_cast<size_t>(ten.n) * layers, {});
  ten.in.assign(static_cast<size_t>(ten.n) * layers, {});

  auto add = [&](TenArc a) {
    const int idx = static_cast<int>(ten.arcs.size());
    ten.arcs.push_back(a);
    ten.out[ten.layer(a.from, a.t_from)].push_back(idx);
    ten.in[ten.layer(a.to, a.t_to)].push_back(idx);
  };

  for (int v = 0; v < ten.n; ++v)
    for (long long t = 0; t + 1 <= ten.T; ++t)
      add(TenArc{v, t, v, t + 1, 0, false});
  for (long long t = 0; t <= ten.T; ++t)
    for (int v = 0; v < ten.n; ++v)
      for (int w = 0; w < ten.n; ++w) {
        if (v == w) continue;
        const long long d = inst.metric(v, w);
        if (t + d <= ten.T) add(TenArc{v, t, w, t + d, d, true});
      }
  return ten;
}

}  // namespace relo
