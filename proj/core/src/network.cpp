#include "relocation/network.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace relo {

int Network::add_station(const std::string& name, long long capacity) {
  names.push_back(name);
  station.push_back(true);
  depot.push_back(false);
  cap.push_back(capacity);
  return node_count() - 1;
}

int Network::add_depot(const std::string& name) {
  names.push_back(name);
  station.push_back(false);
  depot.push_back(true);
  cap.push_back(0);
  return node_count() - 1;
}

void Network::add_arc(int from, int to, long long w) {
  arcs.push_back(Arc{from, to, w});
}

int Network::index_of(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i)
    if (names[i] == name) return i;
  return -1;
}

std::vector<int> Network::stations() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (station[i]) out.push_back(i);
  return out;
}

std::vector<int> Network::depots() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (depot[i]) out.push_back(i);
  return out;
}

bool Network::strongly_connected() const {
  const int n = node_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const Arc& a : arcs) {
    fwd[a.from].push_back(a.to);
    bwd[a.to].push_back(a.from);
  }
  auto reach_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          q.push(w);
        }
    }
    return count == n;
  };
  return reach_all(fwd) && reach_all(bwd);
}

void Network::validate() const {
  const int n = node_count();
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw Error("arc endpoint out of range");
    if (a.from == a.to) throw Error("self-loop arc at " + names[a.from]);
    if (a.w < 1) throw Error("arc weight must be >= 1");
  }
  for (int i = 0; i < n; ++i) {
    if (station[i] == depot[i])
      throw Error("node " + names[i] + " must be exactly one of station/depot");
    if (station[i] && cap[i] < 0)
      throw Error("negative capacity at " + names[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j]) throw Error("duplicate node name " + names[i]);
  if (n > 1 && !strongly_connected())
    throw Error("network is not strongly connected");
}

std::vector<int> Instance::driver_depots() const {
  std::vector<int> out;
  out.reserve(k);
  for (const auto& [depot, count] : zd)
    for (int c = 0; c < count; ++c) out.push_back(depot);
  return out;
}

void Instance::validate() const {
  network.validate();
  const int n = network.node_count();
  if (static_cast<int>(z0.size()) != n || static_cast<int>(zT.size()) != n)
    throw Error("state size does not match node count");
  long long s0 = 0, sT = 0;
  for (int v = 0; v < n; ++v) {
    if (z0[v] < 0 || zT[v] < 0) throw Error("negative car count");
    if (network.depot[v] && (z0[v] != 0 || zT[v] != 0))
      throw Error("depot " + network.names[v] + " must not hold cars");
    if (network.station[v] && (z0[v] > network.cap[v] || zT[v] > network.cap[v]))
      throw Error("car count exceeds capacity at " + network.names[v]);
    s0 += z0[v];
    sT += zT[v];
  }
  if (s0 != sT) throw FleetMismatchError("fleet not conserved between states");
  if (T < 0) throw Error("negative time horizon");
  if (L < 1) throw Error("convoy capacity must be positive");
  if (k < 1) throw Error("driver count must be positive");
  int drivers = 0;
  for (const auto& [depot, count] : zd) {
    if (depot < 0 || depot >= n || !network.depot[depot])
      throw Error("zd entry is not a depot");
    if (count < 0) throw Error("negative driver count in zd");
    drivers += count;
  }
  if (drivers != k) throw Error("zd does not sum to k");
  if (metric.n != n) throw Error("metric size does not match network");
  metric.check_axioms();
}

StationClasses classify_stations(const Network& net, const SystemState& z0,
                                 const SystemState& zT) {
  StationClasses c;
  for (int v : net.stations()) {
    if (z0[v] > zT[v])
      c.overfull.push_back(v);
    else if (z0[v] < zT[v])
      c.underfull.push_back(v);
    else
      c.balanced.push_back(v);
  }
  return c;
}

std::vector<Task> derive_tasks(const Network& net, const SystemState& z0,
                               const SystemState& zT) {
  long long s0 = std::accumulate(z0.begin(), z0.end(), 0LL);
  long long sT = std::accumulate(zT.begin(), zT.end(), 0LL);
  if (s0 != sT) throw FleetMismatchError("fleet not conserved between states");
  std::vector<Task> tasks;
  for (int v : net.stations())
    if (z0[v] != zT[v]) tasks.push_back(Task{v, z0[v] - zT[v]});
  return tasks;
}

}  // namespace relo
