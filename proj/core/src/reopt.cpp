#include <algorithm>
#include <map>

#include "relocation/heuristic.hpp"

namespace relo {

std::pair<Schedule, std::vector<TransportRequest>> withdraw_worst(
    const Schedule& s, int N, const Instance& inst) {
  struct Entry {
    Rational cm;
    int origin, destination, tour, served_idx;
    long long y;
  };
  std::vector<Entry> entries;
  for (int j = 0; j < static_cast<int>(s.tours.size()); ++j) {
    const Tour& t = s.tours[j];
    for (int i = 0; i < static_cast<int>(t.served.size()); ++i) {
      const Served& sv = t.served[i];
      const Tour without = remove_served(t, i, inst);
      const Rational cm{tour_length(t, inst.metric) -
                            tour_length(without, inst.metric),
                        sv.y};
      entries.push_back(Entry{cm, sv.origin, sv.destination, j, i, sv.y});
    }
  }
  // Highest marginal cost per load first; deterministic tie-breaking.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     const int c = Rational::cmp(a.cm, b.cm);
                     if (c != 0) return c > 0;
                     return std::tie(a.origin, a.destination, a.tour) <
                            std::tie(b.origin, b.destination, b.tour);
                   });
  if (N < static_cast<int>(entries.size())) entries.resize(N);

  Schedule out = s;
  std::vector<TransportRequest> withdrawn;
  // Remove per tour in descending served index so indices stay valid.
  std::map<int, std::vector<int>> by_tour;
  for (const Entry& e : entries) {
    withdrawn.push_back(TransportRequest{e.origin, e.destination, e.y});
    by_tour[e.tour].push_back(e.served_idx);
  }
  for (auto& [tour, idxs] : by_tour) {
    std::sort(idxs.rbegin(), idxs.rend());
    for (int i : idxs) out.tours[tour] = remove_served(out.tours[tour], i, inst);
  }
  std::sort(withdrawn.begin(), withdrawn.end());
  return {std::move(out), std::move(withdrawn)};
}

std::vector<TransportRequest> rematch(
    const Schedule& s, const std::vector<TransportRequest>& withdrawn,
    const Instance& inst) {
  if (withdrawn.empty()) return {};
  // Aggregate withdrawn load per origin / destination station.
  std::map<int, long long> po, pu;
  for (const TransportRequest& tr : withdrawn) {
    po[tr.origin] += tr.x;
    pu[tr.destination] += tr.x;
  }

  BipartiteInstance bi;
  for (const auto& [v, p] : po) {
    bi.left.push_back(v);
    bi.pl.push_back(p);
  }
  for (const auto& [v, p] : pu) {
    bi.right.push_back(v);
    bi.pr.push_back(p);
  }
  // Edge weight: cheapest single-car insertion increment over all tours.
  // Pairs no tour admits get a large finite penalty so the matching stays
  // well-defined; pdp_insert reports infeasibility if one is ever chosen.
  constexpr long long kBig = 1'000'000'000'000LL;
  bi.w.assign(bi.left.size() * bi.right.size(), kBig);
  for (size_t i = 0; i < bi.left.size(); ++i)
    for (size_t j = 0; j < bi.right.size(); ++j) {
      const TransportRequest unit{bi.left[i], bi.right[j], 1};
      long long best = kBig;
      for (const Tour& t : s.tours) {
        auto cand = best_insertion(t, unit, inst);
        if (cand) best = std::min(best, cand->delta_len);
      }
      bi.w[i * bi.right.size() + j] = best;
    }

  const MatchingSolution sol = min_cost_perfect_p_matching(bi);
  return matching_to_requests(bi, sol);
}

Schedule reopt(const Instance& inst, const ReoptParams& params) {
  if (params.N < 1 || params.Delta < 1)
    throw ParamConflictError("N and Delta must be >= 1");

  const std::vector<Task> tasks =
      derive_tasks(inst.network, inst.z0, inst.zT);
  const BipartiteInstance bi = build_bipartite(tasks, inst.metric);
  std::vector<TransportRequest> tr =
      matching_to_requests(bi, min_cost_perfect_p_matching(bi));

  Schedule best;
  bool have_best = false;
  for (int round = 0; round < params.Delta; ++round) {
    Schedule s = pdp_insert(inst, tr, params.seed + round);
    if (!have_best || total_tour_length(s, inst.metric) <
                          total_tour_length(best, inst.metric)) {
      best = s;
      have_best = true;
    }
    if (round + 1 == params.Delta) break;

    auto [reduced, withdrawn] = withdraw_worst(s, params.N, inst);
    std::vector<TransportRequest> rematched = rematch(reduced, withdrawn, inst);
    // Next round serves the kept requests plus the rematched ones.
    tr.clear();
    for (const Tour& t : reduced.tours)
      for (const Served& sv : t.served)
        tr.push_back(TransportRequest{sv.origin, sv.destination, sv.y});
    tr.insert(tr.end(), rematched.begin(), rematched.end());
    std::sort(tr.begin(), tr.end());
  }
  return best;
}

}  // namespace relo
