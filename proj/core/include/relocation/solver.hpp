#pragma once

#include <optional>

#include "relocation/ilp.hpp"

namespace relo {

enum class SolveStatus { Optimal, Infeasible, BudgetExhausted };

struct SolveLimits {
  long long node_budget = 20'000'000;  // search-node expansions
  double time_budget = 0;              // seconds; 0 = unlimited
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  long long objective = 0;  // optimum (Optimal) or incumbent if any
  bool has_incumbent = false;
  long long bound = 0;  // proven lower bound on the optimum
  long long nodes = 0;  // expanded search nodes
  std::optional<Schedule> schedule;    // non-preemptive variants, Optimal only
  std::optional<FlowSolution> flow;    // filled by solve_exact_bnb
};

/// Exact solve by best-first branch-and-bound over driver walks in the
/// time-expanded network (non-preemptive variants: drivers routed
/// sequentially, valid because non-preemptive tours are independent;
/// PreemptiveLowerBound: joint chronological search, objective only).
SolveResult solve_exact(const Instance& inst, Variant variant,
                        const SolveLimits& limits = {});

/// Model-level entry point: solves, then encodes the optimal schedule as a
/// flow solution of `model` (non-preemptive variants).
SolveResult solve_exact_bnb(const IlpModel& model,
                            const TimeExpandedNetwork& ten,
                            const Instance& inst,
                            const SolveLimits& limits = {});

/// Optimal objective of the PreemptiveLowerBound variant, or the best proven
/// bound under the given budget. Always a valid lower bound on the
/// non-preemptive optimum.
long long lower_bound(const Instance& inst, const SolveLimits& limits = {});

}  // namespace relo
