#include <limits>

#include "relocation/network.hpp"

namespace relo {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

QuasiMetric metric_closure(const Network& net) {
  const int n = net.node_count();
  QuasiMetric m;
  m.n = n;
  m.dist.assign(static_cast<size_t>(n) * n, kInf);
  for (int v = 0; v < n; ++v) m.dist[v * n + v] = 0;
  for (const Arc& a : net.arcs) {
    long long& d = m.dist[a.from * n + a.to];
    d = std::min(d, a.w);
  }
  // Floyd-Warshall
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const long long dvu = m.dist[v * n + u];
      if (dvu >= kInf) continue;
      for (int w = 0; w < n; ++w) {
        const long long cand = dvu + m.dist[u * n + w];
        if (cand < m.dist[v * n + w]) m.dist[v * n + w] = cand;
      }
    }
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (m.dist[v * n + w] >= kInf)
        throw UnreachablePairError(
            v, w, "no directed path from " + net.names[v] + " to " + net.names[w]);
  m.symmetric = true;
  for (int v = 0; v < n && m.symmetric; ++v)
    for (int w = v + 1; w < n; ++w)
      if (m.dist[v * n + w] != m.dist[w * n + v]) {
        m.symmetric = false;
        break;
      }
  return m;
}

void QuasiMetric::check_axioms() const {
  for (int v = 0; v < n; ++v) {
    if ((*this)(v, v) != 0) throw Error("d(v,v) != 0");
    for (int w = 0; w < n; ++w) {
      if (v != w && (*this)(v, w) <= 0)
        throw Error("d(v,w) must be positive for v != w");
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if ((*this)(v, w) > (*this)(v, u) + (*this)(u, w))
          throw Error("triangle inequality violated");
}

}  // namespace relo
