#pragma once

#include <vector>

#include "relocation/network.hpp"

namespace relo {

/// Complete weighted bipartite graph between overfull stations (left, with
/// surplus p) and underfull stations (right, with deficit p).
struct BipartiteInstance {
  std::vector<int> left;        // overfull station ids
  std::vector<int> right;       // underfull station ids
  std::vector<long long> pl;    // surplus per left node
  std::vector<long long> pr;    // deficit per right node
  std::vector<long long> w;     // row-major |left| x |right| edge weights

  long long weight(int i, int j) const {
    return w[static_cast<size_t>(i) * right.size() + j];
  }
};

/// Integer edge multiplicities of a perfect p-matching.
struct MatchingSolution {
  std::vector<long long> x;  // row-major |left| x |right|
  long long cost = 0;

  long long mult(const BipartiteInstance& bi, int i, int j) const {
    return x[static_cast<size_t>(i) * bi.right.size() + j];
  }
};

/// Builds the bipartite instance from tasks; w(o,u) = d(o,u). Throws
/// EmptySideError if exactly one side is empty.
BipartiteInstance build_bipartite(const std::vector<Task>& tasks,
                                  const QuasiMetric& d);

/// Minimum-cost perfect p-matching via successive shortest paths with
/// potentials; exact in integers, deterministic (lexicographic tie-breaks).
/// Throws UnbalancedError if p-sums differ.
MatchingSolution min_cost_perfect_p_matching(const BipartiteInstance& bi);

/// One transport request per edge with positive multiplicity, in
/// (origin, destination) order.
std::vector<TransportRequest> matching_to_requests(const BipartiteInstance& bi,
                                                   const MatchingSolution& sol);

/// Splits every request (o, u, x) into x copies of (o, u, 1).
std::vector<TransportRequest> uniformize_requests(
    const std::vector<TransportRequest>& trs);

}  // namespace relo
