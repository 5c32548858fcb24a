#include <algorithm>

#include "relocation/heuristic.hpp"

namespace relo {

namespace {

struct TourSkeleton {
  std::vector<int> locs;       // visited nodes, moves.size() + 1 entries
  std::vector<Action> acts;    // actions between consecutive visits
};

TourSkeleton decompose(const Tour& t) {
  TourSkeleton sk;
  sk.locs.push_back(t.moves.front().orig);
  for (const Move& m : t.moves) sk.locs.push_back(m.dest);
  sk.acts = t.actions;
  return sk;
}

/// Rebuilds a tour from its visit/action skeleton with chained loads and
/// canonical (tight, zero-wait) times.
Tour rebuild(int driver, int depot, const TourSkeleton& sk,
             std::vector<Served> served, const Instance& inst) {
  Tour t;
  t.driver = driver;
  t.depot = depot;
  t.served = std::move(served);
  const QuasiMetric& d = inst.metric;
  long long load = 0, time = 0;
  for (size_t i = 0; i + 1 < sk.locs.size(); ++i) {
    const int a = sk.locs[i], b = sk.locs[i + 1];
    const long long dur = a == b ? 0 : d(a, b);
    t.moves.push_back(Move{driver, a, time, b, time + dur, load});
    time += dur;
    if (i < sk.acts.size()) {
      Action act = sk.acts[i];
      act.driver = driver;
      act.time = time;
      t.actions.push_back(act);
      load += act.dx;
      if (load < 0 || load > inst.L)
        throw CapacityExceededError("convoy load leaves [0,L]");
    }
  }
  if (time > inst.T) throw HorizonExceededError("tour exceeds time horizon");
  return t;
}

}  // namespace

Tour insert_request(const Tour& tour, const TransportRequest& tr,
                    int pickup_slot, int drop_slot, long long y,
                    const Instance& inst) {
  const int n = static_cast<int>(tour.moves.size());
  if (pickup_slot < 0 || drop_slot < pickup_slot || drop_slot >= n || y < 1)
    throw Error("invalid insertion slots");
  TourSkeleton sk = decompose(tour);
  sk.locs.insert(sk.locs.begin() + pickup_slot + 1, tr.origin);
  sk.acts.insert(sk.acts.begin() + pickup_slot,
                 Action{tour.driver, tr.origin, 0, y});
  sk.locs.insert(sk.locs.begin() + drop_slot + 2, tr.destination);
  sk.acts.insert(sk.acts.begin() + drop_slot + 1,
                 Action{tour.driver, tr.destination, 0, -y});

  std::vector<Served> served = tour.served;
  for (Served& sv : served) {
    auto shift = [&](int idx) {
      int out = idx + (idx >= pickup_slot ? 1 : 0);
      return out + (out >= drop_slot + 1 ? 1 : 0);
    };
    sv.pickup_action = shift(sv.pickup_action);
    sv.drop_action = shift(sv.drop_action);
  }
  served.push_back(
      Served{tr.origin, tr.destination, y, pickup_slot, drop_slot + 1});
  return rebuild(tour.driver, tour.depot, sk, std::move(served), inst);
}

Tour remove_served(const Tour& tour, int served_idx, const Instance& inst) {
  if (served_idx < 0 || served_idx >= static_cast<int>(tour.served.size()))
    throw NotServedError("served index out of range");
  const Served e = tour.served[served_idx];
  const int pa = e.pickup_action, da = e.drop_action;

  TourSkeleton sk = decompose(tour);
  // Drop the later visit/action first so the earlier indices stay valid.
  sk.locs.erase(sk.locs.begin() + da + 1);
  sk.acts.erase(sk.acts.begin() + da);
  sk.locs.erase(sk.locs.begin() + pa + 1);
  sk.acts.erase(sk.acts.begin() + pa);

  std::vector<Served> served = tour.served;
  served.erase(served.begin() + served_idx);
  for (Served& sv : served) {
    auto shift = [&](int idx) {
      return idx - (idx > pa ? 1 : 0) - (idx > da ? 1 : 0);
    };
    sv.pickup_action = shift(sv.pickup_action);
    sv.drop_action = shift(sv.drop_action);
  }
  return rebuild(tour.driver, tour.depot, sk, std::move(served), inst);
}

namespace {

int find_served(const Tour& tour, const TransportRequest& tr) {
  int fallback = -1;
  for (int i = 0; i < static_cast<int>(tour.served.size()); ++i) {
    const Served& sv = tour.served[i];
    if (sv.origin != tr.origin || sv.destination != tr.destination) continue;
    if (sv.y == tr.x) return i;
    if (fallback < 0) fallback = i;
  }
  return fallback;
}

}  // namespace

Tour remove_request(const Tour& tour, const TransportRequest& tr,
                    const Instance& inst) {
  const int idx = find_served(tour, tr);
  if (idx < 0) throw NotServedError("tour does not serve the request");
  return remove_served(tour, idx, inst);
}

Rational marginal_cost(const Tour& tour, const TransportRequest& tr,
                       const Instance& inst) {
  const int idx = find_served(tour, tr);
  if (idx < 0) throw NotServedError("tour does not serve the request");
  const long long y = tour.served[idx].y;
  const Tour without = remove_served(tour, idx, inst);
  return Rational{tour_length(tour, inst.metric) -
                      tour_length(without, inst.metric),
                  y};
}

std::optional<InsertionCandidate> best_insertion(const Tour& tour,
                                                 const TransportRequest& tr,
                                                 const Instance& inst) {
  const QuasiMetric& d = inst.metric;
  const int n = static_cast<int>(tour.moves.size());
  const long long len = tour_length(tour, inst.metric);
  std::optional<InsertionCandidate> best;

  for (int ps = 0; ps < n; ++ps) {
    long long segmax = tour.moves[ps].load;
    for (int ds = ps; ds < n; ++ds) {
      segmax = std::max(segmax, tour.moves[ds].load);
      const long long y = std::min<long long>(tr.x, inst.L - segmax);
      if (y < 1) continue;

      const int A = tour.moves[ps].orig, B = tour.moves[ps].dest;
      const int X = tour.moves[ds].orig, Y = tour.moves[ds].dest;
      long long delta;
      if (ps == ds) {
        delta = d(A, tr.origin) + d(tr.origin, tr.destination) +
                d(tr.destination, B) - (A == B ? 0 : d(A, B));
      } else {
        delta = d(A, tr.origin) + d(tr.origin, B) - (A == B ? 0 : d(A, B)) +
                d(X, tr.destination) + d(tr.destination, Y) -
                (X == Y ? 0 : d(X, Y));
      }
      if (len + delta > inst.T) continue;

      const Rational cm{delta, y};
      const bool better =
          !best ||
          Rational::cmp(cm, best->cm) < 0 ||
          (Rational::cmp(cm, best->cm) == 0 && y > best->y);
      if (better)
        best = InsertionCandidate{-1, ps, ds, y, delta, cm};
    }
  }
  return best;
}

}  // namespace relo
