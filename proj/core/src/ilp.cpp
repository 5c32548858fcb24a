#include <algorithm>

#include "relocation/ilp.hpp"

namespace relo {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Backhaul: return "backhaul";
    case Variant::NoBackhaul: return "nobackhaul";
    case Variant::PreemptiveLowerBound: return "lowerbound";
  }
  return "unknown";
}

namespace {

std::string arc_suffix(const TenArc& a) {
  return std::to_string(a.from) + "_" + std::to_string(a.t_from) + "_" +
         std::to_string(a.to) + "_" + std::to_string(a.t_to);
}

}  // namespace

IlpModel build_ilp(const TimeExpandedNetwork& ten, const Instance& inst,
                   Variant variant) {
  const bool aggregated = variant == Variant::PreemptiveLowerBound;
  IlpModel m;
  m.variant = variant;
  m.drivers = aggregated ? 1 : inst.k;
  m.arc_count = ten.arcs.size();
  m.T = ten.T;

  const int n = ten.n;
  m.F_var.assign(m.drivers * m.arc_count, -1);
  m.f_var.assign(m.drivers * m.arc_count, -1);
  m.fh_var.assign(static_cast<size_t>(n) * std::max<long long>(m.T, 1), -1);

  for (int i = 0; i < m.drivers; ++i)
    for (size_t a = 0; a < m.arc_count; ++a) {
      const std::string suffix =
          std::to_string(i) + "_" + arc_suffix(ten.arcs[a]);
      m.F_var[i * m.arc_count + a] = static_cast<int>(m.vars.size());
      m.vars.push_back(IlpVariable{"F_" + suffix, !aggregated, 0,
                                   aggregated ? inst.k : 1});
      if (ten.arcs[a].relocation) {
        m.f_var[i * m.arc_count + a] = static_cast<int>(m.vars.size());
        m.vars.push_back(IlpVariable{"f_" + suffix, false, 0, -1});
      }
    }
  for (int v = 0; v < n; ++v)
    if (inst.network.station[v])
      for (long long t = 0; t < m.T; ++t) {
        m.fh_var[v * m.T + t] = static_cast<int>(m.vars.size());
        m.vars.push_back(IlpVariable{
            "fh_" + std::to_string(v) + "_" + std::to_string(t), false, 0, -1});
      }

  for (size_t a = 0; a < m.arc_count; ++a)
    if (ten.arcs[a].relocation && ten.arcs[a].w != 0)
      for (int i = 0; i < m.drivers; ++i)
        m.objective.push_back(LinTerm{ten.arcs[a].w, m.F(i, a)});

  auto row = [&](std::string name, RowSense sense, long long rhs) -> IlpRow& {
    m.rows.push_back(IlpRow{std::move(name), {}, sense, rhs});
    return m.rows.back();
  };
  auto add = [](IlpRow& r, long long coef, int var) {
    if (var >= 0 && coef != 0) r.terms.push_back(LinTerm{coef, var});
  };

  if (m.T == 0) {
    // Degenerate horizon: no arcs; feasible iff already balanced.
    for (int v = 0; v < n; ++v)
      if (inst.network.station[v])
        row("bal0_" + std::to_string(v), RowSense::EQ,
            inst.z0[v] - inst.zT[v]);
    return m;
  }

  const StationClasses cls =
      classify_stations(inst.network, inst.z0, inst.zT);
  std::vector<int> kind(n, 0);
  for (int v : cls.overfull) kind[v] = 1;
  for (int v : cls.underfull) kind[v] = -1;

  // Car source and sink balances at the t=0 and t=T layers.
  for (int v = 0; v < n; ++v) {
    IlpRow& src = row("src_" + std::to_string(v), RowSense::EQ, inst.z0[v]);
    add(src, 1, m.fh(v, 0));
    for (int a : ten.out_arcs(v, 0))
      if (ten.arcs[a].relocation)
        for (int i = 0; i < m.drivers; ++i) add(src, 1, m.f(i, a));

    IlpRow& snk = row("snk_" + std::to_string(v), RowSense::EQ, inst.zT[v]);
    add(snk, 1, m.fh(v, m.T - 1));
    for (int a : ten.in_arcs(v, m.T))
      if (ten.arcs[a].relocation)
        for (int i = 0; i < m.drivers; ++i) add(snk, 1, m.f(i, a));
  }

  // Driver start balances; B_v^i comes from the depot assignment.
  const std::vector<int> assigned = inst.driver_depots();
  for (int i = 0; i < m.drivers; ++i)
    for (int v = 0; v < n; ++v) {
      long long b = 0;
      if (aggregated) {
        auto it = inst.zd.find(v);
        b = it == inst.zd.end() ? 0 : it->second;
      } else {
        b = assigned[i] == v ? 1 : 0;
      }
      IlpRow& r = row(
          "dsrc_" + std::to_string(i) + "_" + std::to_string(v), RowSense::EQ,
          b);
      for (int a : ten.out_arcs(v, 0)) add(r, 1, m.F(i, a));
    }

  // Driver end rules at the t=T layer.
  if (variant == Variant::Backhaul) {
    for (int i = 0; i < m.drivers; ++i)
      for (int v : inst.network.depots()) {
        IlpRow& r = row("dsnk_" + std::to_string(i) + "_" + std::to_string(v),
                        RowSense::EQ, assigned[i] == v ? 1 : 0);
        for (int a : ten.in_arcs(v, m.T)) add(r, 1, m.F(i, a));
      }
  } else if (variant == Variant::NoBackhaul) {
    for (int i = 0; i < m.drivers; ++i) {
      for (int v : inst.network.depots()) {
        IlpRow& r = row("dend_" + std::to_string(i) + "_" + std::to_string(v),
                        RowSense::LE, 1);
        for (int a : ten.in_arcs(v, m.T)) add(r, 1, m.F(i, a));
      }
      for (int v : inst.network.stations()) {
        IlpRow& r = row("dendv_" + std::to_string(i) + "_" + std::to_string(v),
                        RowSense::EQ, 0);
        for (int a : ten.in_arcs(v, m.T)) add(r, 1, m.F(i, a));
      }
    }
  } else {
    IlpRow& total = row("dsnk_total", RowSense::EQ, inst.k);
    for (int v : inst.network.depots())
      for (int a : ten.in_arcs(v, m.T)) add(total, 1, m.F(0, a));
    for (int v : inst.network.stations()) {
      IlpRow& r = row("dendv_" + std::to_string(v), RowSense::EQ, 0);
      for (int a : ten.in_arcs(v, m.T)) add(r, 1, m.F(0, a));
    }
  }

  // Conservation at internal layers 0 < t < T.
  for (int v = 0; v < n; ++v)
    for (long long t = 1; t < m.T; ++t) {
      IlpRow& r = row(
          "cons_" + std::to_string(v) + "_" + std::to_string(t), RowSense::EQ,
          0);
      add(r, 1, m.fh(v, t - 1));
      add(r, -1, m.fh(v, t));
      for (int a : ten.in_arcs(v, t))
        if (ten.arcs[a].relocation)
          for (int i = 0; i < m.drivers; ++i) add(r, 1, m.f(i, a));
      for (int a : ten.out_arcs(v, t))
        if (ten.arcs[a].relocation)
          for (int i = 0; i < m.drivers; ++i) add(r, -1, m.f(i, a));
    }
  for (int i = 0; i < m.drivers; ++i)
    for (int v = 0; v < n; ++v)
      for (long long t = 1; t < m.T; ++t) {
        IlpRow& r = row("dcons_" + std::to_string(i) + "_" + std::to_string(v) +
                            "_" + std::to_string(t),
                        RowSense::EQ, 0);
        for (int a : ten.in_arcs(v, t)) add(r, 1, m.F(i, a));
        for (int a : ten.out_arcs(v, t)) add(r, -1, m.F(i, a));
      }

  // Non-preemption monotonicity per station class (skipped when aggregated).
  if (!aggregated)
    for (int i = 0; i < m.drivers; ++i)
      for (int v = 0; v < n; ++v) {
        if (!inst.network.station[v]) continue;
        const RowSense sense = kind[v] > 0   ? RowSense::LE
                               : kind[v] < 0 ? RowSense::GE
                                             : RowSense::EQ;
        for (long long t = 1; t < m.T; ++t) {
          IlpRow& r = row("mono_" + std::to_string(i) + "_" +
                              std::to_string(v) + "_" + std::to_string(t),
                          sense, 0);
          for (int a : ten.in_arcs(v, t))
            if (ten.arcs[a].relocation) add(r, 1, m.f(i, a));
          for (int a : ten.out_arcs(v, t))
            if (ten.arcs[a].relocation) add(r, -1, m.f(i, a));
        }
      }

  // Coupling: cars move only inside a convoy of capacity L.
  for (int i = 0; i < m.drivers; ++i)
    for (size_t a = 0; a < m.arc_count; ++a) {
      if (!ten.arcs[a].relocation) continue;
      IlpRow& r =
          row("cpl_" + std::to_string(i) + "_" + arc_suffix(ten.arcs[a]),
              RowSense::LE, 0);
      add(r, 1, m.f(i, a));
      add(r, -inst.L, m.F(i, a));
    }
  return m;
}

long long IlpModel::objective_value(const std::vector<long long>& x) const {
  long long obj = 0;
  for (const LinTerm& t : objective) obj += t.coef * x[t.var];
  return obj;
}

std::vector<std::string> IlpModel::check(const FlowSolution& sol) const {
  std::vector<std::string> bad;
  if (sol.value.size() != vars.size()) {
    bad.push_back("solution size mismatch");
    return bad;
  }
  for (size_t i = 0; i < vars.size(); ++i) {
    const long long x = sol.value[i];
    if (x < vars[i].lb || (vars[i].ub >= 0 && x > vars[i].ub))
      bad.push_back("bound " + vars[i].name);
  }
  for (const IlpRow& r : rows) {
    long long lhs = 0;
    for (const LinTerm& t : r.terms) lhs += t.coef * sol.value[t.var];
    const bool ok = r.sense == RowSense::LE   ? lhs <= r.rhs
                    : r.sense == RowSense::GE ? lhs >= r.rhs
                                              : lhs == r.rhs;
    if (!ok) bad.push_back("row " + r.name);
  }
  if (objective_value(sol.value) != sol.objective)
    bad.push_back("objective mismatch");
  return bad;
}

}  // namespace relo
