#include <algorithm>
#include <random>

#include "relocation/heuristic.hpp"

namespace relo {

Schedule pdp_insert(const Instance& inst,
                    const std::vector<TransportRequest>& requests,
                    std::uint64_t seed) {
  Schedule s;
  const std::vector<int> depots = inst.driver_depots();
  for (int j = 0; j < inst.k; ++j) s.tours.push_back(empty_tour(j, depots[j]));

  std::vector<TransportRequest> tr = requests;
  std::sort(tr.begin(), tr.end());
  std::mt19937_64 rng(seed);

  while (!tr.empty()) {
    // Prefer a request with a station already visited by some tour (stable
    // scan in sorted order); otherwise pick one at random.
    std::vector<bool> visited(inst.network.node_count(), false);
    for (const Tour& t : s.tours)
      for (const Action& a : t.actions) visited[a.station] = true;
    size_t pick = tr.size();
    for (size_t i = 0; i < tr.size(); ++i)
      if (visited[tr[i].origin] || visited[tr[i].destination]) {
        pick = i;
        break;
      }
    if (pick == tr.size()) pick = static_cast<size_t>(rng() % tr.size());
    const TransportRequest req = tr[pick];

    std::optional<InsertionCandidate> best;
    for (int j = 0; j < inst.k; ++j) {
      auto cand = best_insertion(s.tours[j], req, inst);
      if (!cand) continue;
      cand->tour = j;
      const bool better =
          !best || Rational::cmp(cand->cm, best->cm) < 0 ||
          (Rational::cmp(cand->cm, best->cm) == 0 &&
           (cand->y > best->y ||
            (cand->y == best->y && cand->tour < best->tour)));
      if (better) best = cand;
    }
    if (!best)
      throw NoFeasibleInsertionError(
          req.origin, req.destination,
          "no tour admits the request within capacity and horizon");

    s.tours[best->tour] =
        insert_request(s.tours[best->tour], req, best->pickup_slot,
                       best->drop_slot, best->y, inst);

    tr.erase(tr.begin() + pick);
    if (best->y < req.x) {
      const TransportRequest rest{req.origin, req.destination,
                                  req.x - best->y};
      tr.insert(std::upper_bound(tr.begin(), tr.end(), rest), rest);
    }
  }
  return s;
}

}  // namespace relo
