#pragma once

#include <cstdint>
#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

// Dense complex measure over {0,1}^n (n <= 20 unless unsafe).
struct ComplexMeasure {
  int n = 0;
  std::vector<cd> w;

  ComplexMeasure() = default;
  explicit ComplexMeasure(int n_) : n(n_), w(std::size_t{1} << n_, cd(0.0)) {}
  static ComplexMeasure delta(int n, Config sigma);

  cd total() const;
  cd measure_of(const std::vector<Config>& event) const;
  std::vector<Config> support(double tol = 0.0) const;
};

double l1_distance(const ComplexMeasure& a, const ComplexMeasure& b);

struct PartitionValue {
  cd value;
  double abs_sum = 0.0;  // sum of term magnitudes
  bool vanishing(double rel = 1e-12) const { return std::abs(value) <= rel * abs_sum; }
};

PartitionValue partition_ly_detail(const Hypergraph& h, const Weights& lambda);
PartitionValue partition_fs_detail(const Hypergraph& h, const Weights& beta);
cd partition_ly(const Hypergraph& h, const Weights& lambda);
cd partition_fs(const Hypergraph& h, const Weights& beta);

ComplexMeasure gibbs(const Hypergraph& h, const Weights& lambda);

struct Marginal {
  cd p0, p1;
};
// tau gives the spins on V \ {v}; its bit v is ignored.
Marginal conditional_marginal(const Hypergraph& h, const Weights& lambda, int v, Config tau);

cd edge_ratio(const Hypergraph& h, const Weights& lambda, int i);
cd marginal_allone(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s);

std::vector<std::uint64_t> size_coefficients(const Hypergraph& h);
// Coefficients of x -> Z(x * lambda) in x, degree n.
std::vector<cd> weighted_size_polynomial(const Hypergraph& h, const Weights& lambda);

Weights uniform_weights(int n, cd value);

}  // namespace hz
