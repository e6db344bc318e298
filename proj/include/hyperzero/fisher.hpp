#pragma once

#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

// Edge weights beta become an auxiliary vertex v_e per edge with beta_e != 0,
// carrying lambda = (1 - beta_e)/beta_e; original vertices carry lambda = 1.
struct ReducedInstance {
  Hypergraph h;
  Weights lambda;
  cd scale = 1.0;              // product of the nonzero beta_e
  std::vector<int> aux_of_edge;  // auxiliary vertex id per edge, -1 when beta_e = 0
};

ReducedInstance reduce(const Hypergraph& h, const Weights& beta);

struct IdentityCheck {
  cd lhs;  // Z^ly(H', lambda') * scale
  cd rhs;  // Z^fs(H, beta)
  double rel_gap = 0.0;
  bool ok = false;
};
IdentityCheck verify_identity(const Hypergraph& h, const Weights& beta);

bool structure_check(const Hypergraph& h, const Weights& beta);

}  // namespace hz
