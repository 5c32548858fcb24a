#pragma once

#include "relocation/network.hpp"

namespace relo {

/// Random planar instance shape: stations and depots scattered on a square
/// plane, each node linked to its nearest neighbours plus a random spanning
/// tree for connectivity, rounded Euclidean arc weights.
struct GeneratorParams {
  int stations = 10;
  int imbalanced = 4;  // split evenly between overfull and underfull
  int depots = 1;
  int k = 1;
  int L = 1;
  long long T = 100;
  int plane = 100;          // side length of the square
  int neighbors = 3;        // nearest-neighbour links per node
  int max_surplus = 3;      // per-station imbalance magnitude in [1, max]
  int base_stock = 2;       // balanced stock level in [0, base]
  bool symmetric = true;    // false: perturb each direction by +0..20%
  bool backhaul = true;
  unsigned long long seed = 0;
};

/// Deterministic per seed. Throws ParamConflictError on inconsistent
/// parameters (odd imbalance split, more imbalanced than stations, ...).
Instance generate_instance(const GeneratorParams& params);

}  // namespace relo
