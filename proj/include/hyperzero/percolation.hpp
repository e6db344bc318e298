#pragma once

#include <optional>
#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

// gamma = ceil(log2(4m / ((1-eta) eps))) + 1
int choose_gamma(int m, double eta, double eps);

struct PercolationOptions {
  int k = 0;      // 0: max edge size of H_i plus e
  int delta = 0;  // 0: max degree of H_i plus e
  // Subtrees whose total modulus is provably below this are skipped; the
  // skipped bound is reported. 0 disables pruning.
  double prune_tol = 1e-20;
};

struct MarginalEstimate {
  cd r_star;            // 1 - allone_mass
  cd allone_mass;       // mass of finished branches where all of TS(e,0) resolve to 1
  cd terminal_mass;     // sum of masses of all terminal nodes, equals 1
  long leaves = 0;      // finished branches
  long aborted = 0;     // b > gamma or word exhausted
  double aborted_abs = 0.0;
  long pruned = 0;
  double pruned_bound = 0.0;  // upper bound on the modulus skipped by pruning
  long word_length = 0;       // gamma * k * (2 Delta k^2)
  bool root_degree_flag = false;  // root degree bound exceeds the non-root bound
};

// Estimate of R_i = Z(H_{i+1}) / Z(H_i) where H_{i+1} = H_i + e, from the
// stationary scan dynamics on H_i with bad components of at most gamma
// non-root vertices.
MarginalEstimate approx_marginal(const Hypergraph& h_i, const std::vector<int>& e, const Weights& lambda, int gamma,
                                 const PercolationOptions& opts = {});

struct ApproxOptions {
  std::optional<int> gamma;  // overrides choose_gamma
  double region_eps = 0.0;   // 0: half of 1/(9 k^5 Delta^2)
  double prune_tol = 1e-20;
};

struct ApproxResult {
  cd z_hat;
  int gamma = 0;
  bool certified = false;
  double region_eps = 0.0;
  double counting_lambda_c = 0.0;
  long kappa = 0;  // 4 Delta^2 k^4 gamma, reported only; aborts use b > gamma
  std::vector<cd> ratios;
  std::vector<MarginalEstimate> details;
};

ApproxResult approx_partition(const Hypergraph& h, const Weights& lambda, double eps, double eta,
                              const ApproxOptions& opts = {});

}  // namespace hz
