#include "relocation/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace relo {

using nlohmann::json;  // plain json: object keys are kept sorted

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int node_id(const Network& net, const std::string& name) {
  const int id = net.index_of(name);
  if (id < 0) throw Error("unknown node name '" + name + "'");
  return id;
}

json state_to_json(const Network& net, const SystemState& z) {
  json out = json::object();
  for (int v = 0; v < net.node_count(); ++v)
    if (net.station[v]) out[net.names[v]] = z[v];
  return out;
}

SystemState state_from_json(const Network& net, const json& j) {
  SystemState z(net.node_count(), 0);
  for (auto it = j.begin(); it != j.end(); ++it)
    z[node_id(net, it.key())] = it.value().get<long long>();
  return z;
}

}  // namespace

std::string write_instance(const Instance& inst) {
  const Network& net = inst.network;
  json j;
  j["stations"] = json::array();
  for (int v : net.stations())
    j["stations"].push_back({{"id", net.names[v]}, {"cap", net.cap[v]}});
  j["depots"] = json::array();
  for (int v : net.depots()) j["depots"].push_back(net.names[v]);
  j["arcs"] = json::array();
  for (const Arc& a : net.arcs)
    j["arcs"].push_back(
        {{"from", net.names[a.from]}, {"to", net.names[a.to]}, {"w", a.w}});
  j["z0"] = state_to_json(net, inst.z0);
  j["zT"] = state_to_json(net, inst.zT);
  j["T"] = inst.T;
  j["L"] = inst.L;
  j["k"] = inst.k;
  j["zd"] = json::object();
  for (const auto& [depot, count] : inst.zd) j["zd"][net.names[depot]] = count;
  j["backhaul"] = inst.backhaul;
  return dump(j);
}

Instance read_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed instance file: ") + e.what());
  }
  Instance inst;
  Network& net = inst.network;
  for (const json& s : j.at("stations"))
    net.add_station(s.at("id").get<std::string>(), s.at("cap").get<long long>());
  for (const json& d : j.at("depots")) net.add_depot(d.get<std::string>());
  for (const json& a : j.at("arcs"))
    net.add_arc(node_id(net, a.at("from").get<std::string>()),
                node_id(net, a.at("to").get<std::string>()),
                a.at("w").get<long long>());
  inst.z0 = state_from_json(net, j.at("z0"));
  inst.zT = state_from_json(net, j.at("zT"));
  inst.T = j.at("T").get<long long>();
  inst.L = j.at("L").get<int>();
  inst.k = j.at("k").get<int>();
  for (auto it = j.at("zd").begin(); it != j.at("zd").end(); ++it) {
    const int v = node_id(net, it.key());
    inst.zd[v] = it.value().get<int>();
  }
  inst.backhaul = j.at("backhaul").get<bool>();
  inst.rebuild_metric();
  inst.validate();
  return inst;
}

std::string write_schedule(const Schedule& s, const Network& net) {
  json j;
  j["tours"] = json::array();
  for (const Tour& t : s.tours) {
    json jt;
    jt["driver"] = t.driver;
    jt["depot"] = t.depot >= 0 ? json(net.names[t.depot]) : json(nullptr);
    jt["moves"] = json::array();
    for (const Move& m : t.moves)
      jt["moves"].push_back({{"orig", net.names[m.orig]},
                             {"dep", m.dep},
                             {"dest", net.names[m.dest]},
                             {"arr", m.arr},
                             {"load", m.load}});
    jt["actions"] = json::array();
    for (const Action& a : t.actions)
      jt["actions"].push_back(
          {{"station", net.names[a.station]}, {"time", a.time}, {"dx", a.dx}});
    jt["served"] = json::array();
    for (const Served& sv : t.served)
      jt["served"].push_back({{"origin", net.names[sv.origin]},
                              {"destination", net.names[sv.destination]},
                              {"y", sv.y},
                              {"pickup_action", sv.pickup_action},
                              {"drop_action", sv.drop_action}});
    j["tours"].push_back(jt);
  }
  return dump(j);
}

Schedule read_schedule(const std::string& text, const Network& net) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed schedule file: ") + e.what());
  }
  Schedule s;
  for (const json& jt : j.at("tours")) {
    Tour t;
    t.driver = jt.at("driver").get<int>();
    t.depot = jt.at("depot").is_null()
                  ? -1
                  : node_id(net, jt.at("depot").get<std::string>());
    for (const json& jm : jt.at("moves"))
      t.moves.push_back(Move{t.driver,
                             node_id(net, jm.at("orig").get<std::string>()),
                             jm.at("dep").get<long long>(),
                             node_id(net, jm.at("dest").get<std::string>()),
                             jm.at("arr").get<long long>(),
                             jm.at("load").get<long long>()});
    for (const json& ja : jt.at("actions"))
      t.actions.push_back(Action{t.driver,
                                 node_id(net, ja.at("station").get<std::string>()),
                                 ja.at("time").get<long long>(),
                                 ja.at("dx").get<long long>()});
    if (jt.contains("served"))
      for (const json& js : jt.at("served"))
        t.served.push_back(
            Served{node_id(net, js.at("origin").get<std::string>()),
                   node_id(net, js.at("destination").get<std::string>()),
                   js.at("y").get<long long>(), js.at("pickup_action").get<int>(),
                   js.at("drop_action").get<int>()});
    s.tours.push_back(std::move(t));
  }
  return s;
}

std::string write_requests(const std::vector<TransportRequest>& trs,
                           const Network& net) {
  json j;
  j["requests"] = json::array();
  for (const TransportRequest& tr : trs)
    j["requests"].push_back({{"origin", net.names[tr.origin]},
                             {"destination", net.names[tr.destination]},
                             {"x", tr.x}});
  return dump(j);
}

std::vector<TransportRequest> read_requests(const std::string& text,
                                            const Network& net) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed request file: ") + e.what());
  }
  std::vector<TransportRequest> out;
  for (const json& jr : j.at("requests"))
    out.push_back(
        TransportRequest{node_id(net, jr.at("origin").get<std::string>()),
                         node_id(net, jr.at("destination").get<std::string>()),
                         jr.at("x").get<long long>()});
  return out;
}

void save_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SinkWriteError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw SinkWriteError("write to '" + path + "' failed");
}

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) {
  return read_instance(load_file(path));
}

Schedule load_schedule(const std::string& path, const Network& net) {
  return read_schedule(load_file(path), net);
}

}  // namespace relo
