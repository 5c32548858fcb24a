#pragma once

#include <ostream>

#include "relocation/analysis.hpp"

namespace relo {

/// Graphviz exports for inspection. Station labels come from `net.names`.
void export_dot(const Network& net, std::ostream& sink);
void export_dot(const TourGraph& g, const Network& net, std::ostream& sink);
void export_dot(const TransportGraph& g, const Network& net,
                std::ostream& sink);
void export_dot(const TourConnectionGraph& g, std::ostream& sink);

}  // namespace relo
