#pragma once

#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

// For f(x) = prod_j (1 - r_j x) with c_0 = 1, returns p with p[s] = sum_j r_j^s
// for s = 1..r; p[0] is unused and set to 0.
std::vector<cd> power_sums(const std::vector<cd>& c, int r);
std::vector<cd> power_sums(const std::vector<cd>& c);  // r = deg of the prefix

// Inverse of power_sums: c_0 = 1, c_1..c_r.
std::vector<cd> coefficients_from_power_sums(const std::vector<cd>& p);

// T_r(x) = -sum_{s<=r} p_s x^s / s
cd taylor_truncation(const std::vector<cd>& c, int r, cd x);

// N (|x|/(1+delta))^{r+1} / ((r+1)(1 - |x|/(1+delta))); Domain if abs_x >= 1+delta.
double truncation_bound(double n_roots, double delta, double abs_x, int r);

// Coefficients of g(x) = Z(x * dir) up to x^r from vertex subsets of size <= r.
// Entries past n are zero.
std::vector<cd> coeff_prefix_his(const Hypergraph& h, const Weights& dir, int r);

// Roots of sum_i c_i x^i after dropping vanishing leading coefficients.
std::vector<cd> polynomial_roots(const std::vector<cd>& c);
// +inf when there are no roots.
double min_root_modulus(const std::vector<cd>& c);

struct TruncationResult {
  cd t_r;
  double bound = 0.0;
  int degree = 0;  // N = deg g
  double min_root_modulus = 0.0;
  cd z_est;        // exp(T_r)
};

// Refuses with Premise when g has a root in |x| <= 1 + delta.
TruncationResult approx_log_partition(const Hypergraph& h, const Weights& dir, int r, double delta);

}  // namespace hz
