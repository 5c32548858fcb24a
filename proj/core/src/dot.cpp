#include "relocation/dot.hpp"

namespace relo {

namespace {

std::string node_label(const TourGraphNode& n, const Network& net) {
  const std::string name =
      n.station >= 0 && n.station < net.node_count() ? net.names[n.station]
                                                     : "?";
  switch (n.kind) {
    case TourNodeKind::Depot: return name + "=";
    case TourNodeKind::Pickup: return name + "+";
    case TourNodeKind::Drop: return name + "-";
    case TourNodeKind::Empty: return name + "0";
  }
  return name;
}

void check(std::ostream& sink) {
  if (!sink) throw SinkWriteError("DOT export stream failure");
}

}  // namespace

void export_dot(const Network& net, std::ostream& sink) {
  sink << "digraph network {\n";
  for (int v = 0; v < net.node_count(); ++v)
    sink << "  n" << v << " [label=\"" << net.names[v] << "\", shape="
         << (net.depot[v] ? "box" : "ellipse") << "];\n";
  for (const Arc& a : net.arcs)
    sink << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.w
         << "\"];\n";
  sink << "}\n";
  check(sink);
}

void export_dot(const TourGraph& g, const Network& net, std::ostream& sink) {
  sink << "digraph tour {\n";
  for (size_t v = 0; v < g.nodes.size(); ++v)
    sink << "  n" << v << " [label=\"" << node_label(g.nodes[v], net)
         << "\"];\n";
  for (const TourGraphArc& a : g.arcs)
    sink << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.w
         << "\"];\n";
  sink << "}\n";
  check(sink);
}

void export_dot(const TransportGraph& g, const Network& net,
                std::ostream& sink) {
  sink << "digraph transport {\n";
  for (size_t v = 0; v < g.graph.nodes.size(); ++v)
    sink << "  n" << v << " [label=\"" << node_label(g.graph.nodes[v], net)
         << "\"];\n";
  for (const TourGraphArc& a : g.graph.arcs)
    sink << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.w
         << "\"];\n";
  for (const TransportArc& a : g.transport)
    sink << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.w
         << "\", style=dashed];\n";
  sink << "}\n";
  check(sink);
}

void export_dot(const TourConnectionGraph& g, std::ostream& sink) {
  sink << "digraph connection {\n";
  for (int v = 0; v < g.tour_count; ++v)
    sink << "  t" << v << " [label=\"tour " << v << "\", shape=box];\n";
  for (const TourConnectionGraph::ConnArc& a : g.arcs)
    sink << "  t" << a.from << " -> t" << a.to << " [label=\"r" << a.request
         << "\"];\n";
  sink << "}\n";
  check(sink);
}

}  // namespace relo
