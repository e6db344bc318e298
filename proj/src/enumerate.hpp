#pragma once

// Depth-first walk over configurations. Vertices are fixed from n-1 down to 0,
// so leaves come out in increasing integer order and an edge can be tested as
// soon as its smallest vertex is fixed.

#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz::detail {

struct EdgesByMin {
  std::vector<std::vector<Config>> masks;
  std::vector<std::vector<int>> ids;
  explicit EdgesByMin(const Hypergraph& h) : masks(h.n), ids(h.n) {
    for (int i = 0; i < h.m(); ++i) {
      Config mask = 0;
      for (int v : h.edges[i]) mask |= Config{1} << v;
      masks[h.edges[i].front()].push_back(mask);
      ids[h.edges[i].front()].push_back(i);
    }
  }
};

// visit(sigma, weight) for every independent set, weight = prod of lambda over ones.
template <class W, class Visit>
void walk_independent(const Hypergraph& h, const EdgesByMin& ebm, const std::vector<W>& lambda, int v,
                      Config sigma, W w, Visit& visit) {
  if (v < 0) {
    visit(sigma, w);
    return;
  }
  walk_independent(h, ebm, lambda, v - 1, sigma, w, visit);
  Config s1 = sigma | (Config{1} << v);
  for (Config mask : ebm.masks[v])
    if ((s1 & mask) == mask) return;
  walk_independent(h, ebm, lambda, v - 1, s1, w * lambda[v], visit);
}

template <class W, class Visit>
void for_each_independent(const Hypergraph& h, const std::vector<W>& lambda, Visit visit) {
  EdgesByMin ebm(h);
  walk_independent(h, ebm, lambda, h.n - 1, Config{0}, W(1), visit);
}

}  // namespace hz::detail
