#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relocation/matching.hpp"
#include "relocation/schedule.hpp"

namespace relo {

/// Exact rational (num/den, den > 0); comparisons by cross-multiplication in
/// 128-bit arithmetic, no floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  static int cmp(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  bool operator<(const Rational& o) const { return cmp(*this, o) < 0; }
  bool operator==(const Rational& o) const { return cmp(*this, o) == 0; }
  bool operator<=(const Rational& o) const { return cmp(*this, o) <= 0; }
  double to_double() const { return static_cast<double>(num) / den; }
};

/// Candidate insertion of a request into one tour. Slots index moves of the
/// ORIGINAL tour: the pickup splits move `pickup_slot` at the origin, the
/// drop splits move `drop_slot` at the destination (pickup first if equal).
struct InsertionCandidate {
  int tour = -1;
  int pickup_slot = -1;
  int drop_slot = -1;
  long long y = 0;
  long long delta_len = 0;
  Rational cm;  // delta_len / y
};

struct ReoptParams {
  int N = 1;
  int Delta = 1;
  std::uint64_t seed = 0;
};

/// Splices a pickup (+y at origin) and a drop (-y at destination) into the
/// tour at the given slots, raises convoy loads in between, re-tightens all
/// times (waiting slack is dropped) and records the served request. Throws
/// CapacityExceededError / HorizonExceededError.
Tour insert_request(const Tour& tour, const TransportRequest& tr,
                    int pickup_slot, int drop_slot, long long y,
                    const Instance& inst);

/// Inverse of insert_request for the served entry at `served_idx`: removes
/// the pickup/drop actions and their station visits, lowers loads,
/// re-tightens times.
Tour remove_served(const Tour& tour, int served_idx, const Instance& inst);

/// Removes the first served entry matching the request (exact y preferred).
/// Throws NotServedError.
Tour remove_request(const Tour& tour, const TransportRequest& tr,
                    const Instance& inst);

/// (len(tour) - len(tour without tr)) / y as an exact rational.
Rational marginal_cost(const Tour& tour, const TransportRequest& tr,
                       const Instance& inst);

/// Cheapest feasible (partial) insertion of tr into the tour: exhaustive over
/// slot pairs, y maximal per pair; min CM, ties broken by larger y, then
/// lower slots. Empty if no feasible insertion exists.
std::optional<InsertionCandidate> best_insertion(const Tour& tour,
                                                 const TransportRequest& tr,
                                                 const Instance& inst);

/// Insertion heuristic: starts from k stationary depot tours and inserts
/// (possibly partially) the requests in CM order, preferring requests with a
/// station already visited. Deterministic given seed. Throws
/// NoFeasibleInsertionError.
Schedule pdp_insert(const Instance& inst,
                    const std::vector<TransportRequest>& requests,
                    std::uint64_t seed);

/// Removes the N served requests of highest marginal cost per load (ties:
/// lowest origin, destination, driver) and returns them.
std::pair<Schedule, std::vector<TransportRequest>> withdraw_worst(
    const Schedule& s, int N, const Instance& inst);

/// Re-pairs the withdrawn requests by a min-cost perfect p-matching weighted
/// with the cheapest single-car insertion increment over all tours.
std::vector<TransportRequest> rematch(const Schedule& s,
                                      const std::vector<TransportRequest>& withdrawn,
                                      const Instance& inst);

/// Full pipeline: p-matching, then Delta rounds of insertion + withdraw/
/// rematch; returns the best schedule found.
Schedule reopt(const Instance& inst, const ReoptParams& params);

}  // namespace relo
