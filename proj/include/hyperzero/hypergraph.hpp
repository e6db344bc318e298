#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hyperzero/common.hpp"

namespace hz {

// Vertices are 0..n-1. Edge order is significant: it fixes the chain e_1..e_m.
struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool operator==(const Hypergraph&) const = default;
};

struct StructureReport {
  bool k_uniform = true;
  int k_max = 0;
  int delta = 0;
};

// Throws Structural on ids >= n, empty edges or unsorted edges.
StructureReport validate(const Hypergraph& h);

bool is_independent(const Hypergraph& h, Config sigma);
Hypergraph prefix(const Hypergraph& h, int i);

// Rejection sampling of uniform k-subsets. Throws Generation after 1000*m
// consecutive rejections.
Hypergraph random_instance(int n, int m, int k, int delta_cap, std::uint64_t seed);

inline constexpr int kInfDistance = std::numeric_limits<int>::max();
int hyper_distance(const Hypergraph& h, int u, int v);
std::vector<int> bfs_distances(const Hypergraph& h, int source);

Hypergraph load_json(const std::string& text);
std::string save_json(const Hypergraph& h);

// Helpers shared by the enumeration code. Masks require n <= 64.
std::vector<Config> edge_masks(const Hypergraph& h);
std::vector<std::vector<int>> incidence(const Hypergraph& h);

}  // namespace hz
