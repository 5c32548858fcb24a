#include "relocation/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace relo {

BipartiteInstance build_bipartite(const std::vector<Task>& tasks,
                                  const QuasiMetric& d) {
  BipartiteInstance bi;
  long long sum = 0;
  for (const Task& t : tasks) {
    sum += t.x;
    if (t.x > 0) {
      bi.left.push_back(t.station);
      bi.pl.push_back(t.x);
    } else if (t.x < 0) {
      bi.right.push_back(t.station);
      bi.pr.push_back(-t.x);
    }
  }
  if (sum != 0) throw FleetMismatchError("task surplus does not sum to zero");
  if (bi.left.empty() != bi.right.empty())
    throw EmptySideError("exactly one bipartition side is empty");
  bi.w.resize(bi.left.size() * bi.right.size());
  for (size_t i = 0; i < bi.left.size(); ++i)
    for (size_t j = 0; j < bi.right.size(); ++j)
      bi.w[i * bi.right.size() + j] = d(bi.left[i], bi.right[j]);
  return bi;
}

MatchingSolution min_cost_perfect_p_matching(const BipartiteInstance& bi) {
  const int nl = static_cast<int>(bi.left.size());
  const int nr = static_cast<int>(bi.right.size());
  const long long supply = std::accumulate(bi.pl.begin(), bi.pl.end(), 0LL);
  const long long demand = std::accumulate(bi.pr.begin(), bi.pr.end(), 0LL);
  if (supply != demand) throw UnbalancedError("p-sums differ between sides");

  MatchingSolution sol;
  sol.x.assign(static_cast<size_t>(nl) * std::max(nr, 1), 0);
  if (nl == 0) return sol;

  // Successive shortest paths on the transportation network with potentials.
  // Residual arcs: left i -> right j with reduced cost w - pi_l[i] + pi_r[j],
  // right j -> left i available while x[i][j] > 0. All reduced costs stay
  // nonnegative, so plain Dijkstra applies; (dist, node) keys make the
  // shortest-path tree, and thus the solution, deterministic.
  std::vector<long long> rem_supply = bi.pl, rem_demand = bi.pr;
  std::vector<long long> pi_l(nl, 0), pi_r(nr, 0);
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  long long left_to_send = supply;
  while (left_to_send > 0) {
    // Nodes 0..nl-1: left, nl..nl+nr-1: right.
    const int n = nl + nr;
    std::vector<long long> dist(n, kInf);
    std::vector<int> parent(n, -1);  // for right nodes: the left node used
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int i = 0; i < nl; ++i)
      if (rem_supply[i] > 0) {
        dist[i] = 0;
        pq.push({0, i});
      }
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du != dist[u]) continue;
      if (u < nl) {
        for (int j = 0; j < nr; ++j) {
          const long long rc = bi.weight(u, j) - pi_l[u] + pi_r[j];
          if (du + rc < dist[nl + j]) {
            dist[nl + j] = du + rc;
            parent[nl + j] = u;
            pq.push({dist[nl + j], nl + j});
          }
        }
      } else {
        const int j = u - nl;
        for (int i = 0; i < nl; ++i) {
          if (sol.x[static_cast<size_t>(i) * nr + j] == 0) continue;
          const long long rc = -(bi.weight(i, j) - pi_l[i] + pi_r[j]);
          if (du + rc < dist[i]) {
            dist[i] = du + rc;
            parent[i] = u;
            pq.push({dist[i], i});
          }
        }
      }
    }

    // Cheapest reachable right node with remaining demand; lowest id on ties.
    int best = -1;
    for (int j = 0; j < nr; ++j)
      if (rem_demand[j] > 0 && dist[nl + j] < kInf &&
          (best < 0 || dist[nl + j] < dist[nl + best]))
        best = j;
    if (best < 0) throw UnbalancedError("transportation network disconnected");

    // Bottleneck along the alternating path root(left) -> ... -> best(right).
    // Walking backwards: a right node's parent is the left node feeding it
    // (forward arc, unbounded); a left node's parent is a right node whose
    // matched units x[i][j] are being rerouted (residual capacity x[i][j]).
    long long push = rem_demand[best];
    int root = -1;
    for (int node = nl + best; root < 0;) {
      const int i = parent[node];  // left node
      if (parent[i] < 0) {
        push = std::min(push, rem_supply[i]);
        root = i;
      } else {
        push = std::min(push,
                        sol.x[static_cast<size_t>(i) * nr + (parent[i] - nl)]);
        node = parent[i];
      }
    }

    // Apply the augmentation.
    for (int node = nl + best;;) {
      const int i = parent[node];
      sol.x[static_cast<size_t>(i) * nr + (node - nl)] += push;
      if (parent[i] < 0) break;
      sol.x[static_cast<size_t>(i) * nr + (parent[i] - nl)] -= push;
      node = parent[i];
    }
    rem_supply[root] -= push;
    rem_demand[best] -= push;
    left_to_send -= push;

    // Potential update (distances capped at the target distance) keeps all
    // residual reduced costs nonnegative.
    const long long D = dist[nl + best];
    for (int i = 0; i < nl; ++i) pi_l[i] += D - std::min(dist[i], D);
    for (int j = 0; j < nr; ++j) pi_r[j] += D - std::min(dist[nl + j], D);
  }

  sol.cost = 0;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      sol.cost += bi.weight(i, j) * sol.x[static_cast<size_t>(i) * nr + j];
  return sol;
}

std::vector<TransportRequest> matching_to_requests(const BipartiteInstance& bi,
                                                   const MatchingSolution& sol) {
  std::vector<TransportRequest> out;
  for (size_t i = 0; i < bi.left.size(); ++i)
    for (size_t j = 0; j < bi.right.size(); ++j) {
      const long long x = sol.x[i * bi.right.size() + j];
      if (x > 0) out.push_back(TransportRequest{bi.left[i], bi.right[j], x});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TransportRequest> uniformize_requests(
    const std::vector<TransportRequest>& trs) {
  std::vector<TransportRequest> out;
  for (const TransportRequest& tr : trs)
    for (long long c = 0; c < tr.x; ++c)
      out.push_back(TransportRequest{tr.origin, tr.destination, 1});
  return out;
}

}  // namespace relo
