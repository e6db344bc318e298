#pragma once

#include <vector>

#include "hyperzero/hypergraph.hpp"

namespace hz {

enum class RegionKind { LeeYang, Fisher, Counting };

struct RegionSpec {
  int k = 2;
  int delta = 3;
  double eps = 0.0;
  double lambda_c = 0.0;
  RegionKind kind = RegionKind::LeeYang;
  double eta = 1.0;  // only meaningful for Counting
};

double eps_max_ly(int k, int delta);  // 1/(9 k^5 Delta^2)
double eps_max_fs(int k, int delta);  // 1/(16 (k+1)^5 Delta^2)

// sup lambda with (lambda+eps)/(1+lambda-eps) < rhs^(2/k), rhs = scale/(2 sqrt2 e Delta k^2).
double lambda_c(int k, int delta, double eps);
double counting_lambda_c(int k, int delta, double eps, double eta);

RegionSpec lee_yang_region(int k, int delta, double eps);
RegionSpec counting_region(int k, int delta, double eps, double eta);

// Euclidean distance from z to the real segment [a, b].
double segment_distance(cd z, double a, double b);
bool in_region_ly(cd z, const RegionSpec& reg);
bool in_region_fs(cd z, double eps);

struct ModelParams {
  double N = 0.0;
  double M = 0.0;
  double alpha = 0.0;
};
// k and Delta default to the hypergraph's own values when passed as 0.
ModelParams model_params(const Hypergraph& h, const Weights& lambda, int k = 0, int delta = 0);
bool alpha_condition(const Hypergraph& h, const Weights& lambda, int k = 0, int delta = 0);
double alpha_condition_lhs(const ModelParams& p, int k, int delta);  // 8 e Delta^2 k^4 alpha

bool fisher_condition(int k, int delta, double eps);

struct CertificateReport {
  int k = 0, delta = 0;          // measured
  int k_eff = 0, delta_eff = 0;  // used in the formulas: max(k,2), max(Delta,3)
  double eps = 0.0;
  double eps_max = 0.0;
  bool eps_valid = false;
  double lambda_c = 0.0;
  std::vector<bool> in_region;
  bool all_in_region = false;
  ModelParams params;
  double alpha_lhs = 0.0;
  bool alpha_ok = false;
  bool pass = false;
  std::vector<std::string> reasons;  // why it failed
};
CertificateReport certify(const Hypergraph& h, const Weights& lambda, double eps);

int effective_k(int k);
int effective_delta(int delta);

}  // namespace hz
