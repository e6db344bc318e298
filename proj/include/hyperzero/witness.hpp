#pragma once

#include <string>
#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

// Latest s <= t at which vertex u is updated under the scan i(t) = t mod n.
long pred(int u, long t, int n);
// Sorted ascending.
std::vector<long> ts(const std::vector<int>& u, long t, int n);

struct TsVertex {
  std::vector<long> times;  // sorted ascending
  int origin_edge = -1;     // -1 for a root that is not also an edge vertex
  long anchor = 0;          // largest t producing these timestamps
  bool is_root = false;
};

// Finite slab of the witness graph for times in [-T+1, 0]. Vertices are
// sorted by (min timestamp, origin edge); that order breaks 2-tree ties.
struct WitnessWindow {
  int n = 0;
  long T = 0;
  std::vector<int> s;
  std::vector<TsVertex> vertices;
  std::vector<std::vector<int>> adj;
  int root = -1;

  int size() const { return static_cast<int>(vertices.size()); }
};

WitnessWindow build_window(const Hypergraph& h, const std::vector<int>& s, long T);

struct DegreeCheck {
  int max_nonroot = 0;
  int root_degree = 0;
  long bound_nonroot = 0;  // 2*Delta*k^2 - 2
  long bound_root = 0;     // 2*Delta*k*|S| - 1
  int max_span = 0;        // max(times) - min(times) over all vertices
  bool ok = true;
};
DegreeCheck check_degree_bounds(const WitnessWindow& w, const Hypergraph& h);

std::string window_csv(const WitnessWindow& w);

// 2-trees on an abstract graph given by adjacency lists. Vertex index order
// is the tie-break order.
using AdjList = std::vector<std::vector<int>>;

// Greedy maximal 2-tree of the subgraph induced by `component`, which must be
// connected and contain `root`. Returned sorted ascending.
std::vector<int> construct_2tree(const AdjList& adj, const std::vector<int>& component, int root);

// Pairwise distance >= 2 and connected in the square graph. Distances are
// measured in the subgraph induced by `within` when given, else in the whole graph.
bool is_two_tree(const AdjList& adj, const std::vector<int>& members, const std::vector<int>* within = nullptr);

// Every 2-tree containing root with at most s_max members.
std::vector<std::vector<int>> enumerate_2trees(const AdjList& adj, int root, int s_max);

// Natural log of the bad-tree count bound for size i.
// small: (e D1)^(i-1); otherwise (e(D2+i-2))^(D2-1) (e D1)^(i-1).
double log_bad_tree_bound(int i, double d1, double d2, bool small);

int max_degree_induced(const AdjList& adj, const std::vector<int>& component);
bool is_connected_induced(const AdjList& adj, const std::vector<int>& component);

}  // namespace hz
