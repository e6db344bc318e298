#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

struct SizeDistribution {
  double lambda = 0.0;
  std::vector<std::uint64_t> a;  // number of independent sets of each size
  std::vector<double> probs;     // P[X = t] = a_t lambda^t / Z
  double z = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double sigma() const;
};

SizeDistribution size_distribution(const Hypergraph& h, double lambda);
SizeDistribution distribution_from_coefficients(const std::vector<std::uint64_t>& a, double lambda);

double gauss_density(double x);
double gauss_cdf(double x);

// kappa_1..kappa_{s_max}; index 0 holds kappa_1.
std::vector<double> cumulants(const SizeDistribution& d, int s_max);

double occupancy(const Hypergraph& h, double lambda);
// 1 - (1 + 1/(4 e Delta k^3)) / (1 + lambda)
double occupancy_lower_bound(double lambda, int k, int delta);

double kolmogorov_gap(const SizeDistribution& d);
double lclt_gap(const SizeDistribution& d);

// E[exp(i t Y)] with Y = (X - mean) / sigma
cd char_fn(const SizeDistribution& d, double t);
// Largest c with |phi(t)| <= exp(-c lambda n t^2 / sigma^2) on a uniform grid of
// [-pi sigma, pi sigma] (t = 0 skipped).
double fit_char_constant(const SizeDistribution& d, int n, int grid = 512);

// (1 / 2 pi) int_{-pi}^{pi} phi_X(theta) e^{-i theta t} d theta, composite Simpson.
double fourier_inversion_P(const SizeDistribution& d, int t, int panels = 4096);

std::vector<int> scattered_set(const Hypergraph& h);

struct LambdaStar {
  double lambda_star = 0.0;
  int s = 0;
  double zeta = 0.0;
  double achieved = 0.0;  // n * alpha(lambda_star)
};
LambdaStar find_lambda_star(const Hypergraph& h, int t, double lambda_cap);

struct SizeCountOptions {
  double lambda_cap = 0.0;  // 0: min(1, lambda_c) for the instance
  int order = 8;            // interpolation order in pipeline mode
  bool pipeline = true;
};

struct SizeCount {
  double i_t_hat = 0.0;
  std::uint64_t exact = 0;
  double rel_err = 0.0;
  double lambda_star = 0.0;
  double p_t = 0.0;
  double z = 0.0;
  double z_bound = 0.0;    // truncation bound on log Z in pipeline mode
  bool pipeline = false;   // both P and Z came from the approximate route
  std::string method;      // e.g. "fourier+interpolation", "exact-P+exact-Z"
};

SizeCount count_size_t(const Hypergraph& h, int t, double eta, const SizeCountOptions& opts = {});

}  // namespace hz
