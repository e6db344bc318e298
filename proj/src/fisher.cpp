#include "hyperzero/fisher.hpp"

#include <algorithm>
#include <cmath>

#include "hyperzero/oracle.hpp"

namespace hz {

ReducedInstance reduce(const Hypergraph& h, const Weights& beta) {
  validate(h);
  if (static_cast<int>(beta.size()) != h.m()) throw Error(ErrorKind::Domain, "beta length does not match m");
  ReducedInstance r;
  r.h.n = h.n;
  r.lambda.assign(h.n, cd(1.0));
  for (int i = 0; i < h.m(); ++i) {
    auto e = h.edges[i];
    if (beta[i] == cd(0.0)) {
      r.aux_of_edge.push_back(-1);
    } else {
      const int ve = r.h.n++;
      e.push_back(ve);  // ve exceeds every original id, so e stays sorted
      r.lambda.push_back((1.0 - beta[i]) / beta[i]);
      r.scale *= beta[i];
      r.aux_of_edge.push_back(ve);
    }
    r.h.edges.push_back(std::move(e));
  }
  return r;
}

IdentityCheck verify_identity(const Hypergraph& h, const Weights& beta) {
  auto r = reduce(h, beta);
  IdentityCheck c;
  c.lhs = partition_ly(r.h, r.lambda) * r.scale;
  c.rhs = partition_fs(h, beta);
  const double denom = std::max(std::abs(c.rhs), std::abs(c.lhs));
  c.rel_gap = denom == 0.0 ? 0.0 : std::abs(c.lhs - c.rhs) / denom;
  c.ok = c.rel_gap <= 1e-9;
  return c;
}

bool structure_check(const Hypergraph& h, const Weights& beta) {
  auto before = validate(h);
  auto r = reduce(h, beta);
  auto after = validate(r.h);
  const bool delta_ok = after.delta == before.delta || (before.delta == 0 && after.delta <= 1);
  return delta_ok && after.k_max <= before.k_max + 1;
}

}  // namespace hz
