#include "hyperzero/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hz {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kSqrt2 = std::numbers::sqrt2;

double ly_rhs(int k, int delta) { return 1.0 / (2.0 * kSqrt2 * kE * delta * static_cast<double>(k) * k); }

// Solves (x+eps)/(1+x-eps) = r by bisection; 0 when x = 0 already fails.
double bisect_ratio(double r, double eps) {
  if (!(r < 1.0)) throw Error(ErrorKind::Domain, "degenerate region: right-hand side is not below 1");
  auto f = [eps](double x) { return (x + eps) / (1.0 + x - eps); };
  if (!(f(0.0) < r)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (f(hi) < r) hi *= 2.0;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < r)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

int effective_k(int k) { return std::max(k, 2); }
int effective_delta(int delta) { return std::max(delta, 3); }

double eps_max_ly(int k, int delta) { return 1.0 / (9.0 * std::pow(k, 5) * delta * delta); }
double eps_max_fs(int k, int delta) { return 1.0 / (16.0 * std::pow(k + 1, 5) * delta * delta); }

double lambda_c(int k, int delta, double eps) {
  if (k < 1 || delta < 1 || eps < 0.0) throw Error(ErrorKind::Domain, "lambda_c needs k, Delta >= 1 and eps >= 0");
  return bisect_ratio(std::pow(ly_rhs(k, delta), 2.0 / k), eps);
}

double counting_lambda_c(int k, int delta, double eps, double eta) {
  if (eta < 0.0 || eta > 1.0) throw Error(ErrorKind::Domain, "eta must lie in [0, 1]");
  if (k < 1 || delta < 1 || eps < 0.0) throw Error(ErrorKind::Domain, "lambda_c needs k, Delta >= 1 and eps >= 0");
  if (eta == 0.0) return 0.0;
  return bisect_ratio(std::pow(std::sqrt(eta) * ly_rhs(k, delta), 2.0 / k), eps);
}

RegionSpec lee_yang_region(int k, int delta, double eps) {
  return {k, delta, eps, lambda_c(k, delta, eps), RegionKind::LeeYang, 1.0};
}

RegionSpec counting_region(int k, int delta, double eps, double eta) {
  return {k, delta, eps, counting_lambda_c(k, delta, eps, eta), RegionKind::Counting, eta};
}

double segment_distance(cd z, double a, double b) {
  double x = std::clamp(z.real(), a, b);
  return std::abs(z - cd(x, 0.0));
}

bool in_region_ly(cd z, const RegionSpec& reg) { return segment_distance(z, 0.0, reg.lambda_c) <= reg.eps; }

bool in_region_fs(cd z, double eps) { return segment_distance(z, 0.0, 1.0) <= eps; }

ModelParams model_params(const Hypergraph& h, const Weights& lambda, int k, int delta) {
  auto rep = validate(h);
  if (static_cast<int>(lambda.size()) != h.n) throw Error(ErrorKind::Domain, "lambda length does not match n");
  if (k <= 0) k = rep.k_max;
  if (delta <= 0) delta = rep.delta;
  std::vector<double> ratio(h.n), rest(h.n);
  ModelParams p;
  for (int v = 0; v < h.n; ++v) {
    if (lambda[v] == cd(-1.0)) throw Error(ErrorKind::Numeric, "lambda_v = -1");
    ratio[v] = std::abs(lambda[v] / (1.0 + lambda[v]));
    rest[v] = std::abs(1.0 / (1.0 + lambda[v]));
    p.M = std::max(p.M, ratio[v] + rest[v]);
  }
  for (const auto& e : h.edges) {
    double prod = 1.0;
    for (int v : e) prod *= ratio[v];
    p.N = std::max(p.N, prod);
  }
  p.alpha = p.N * std::pow(p.M, 4.0 * delta * delta * std::pow(k, 5));
  return p;
}

double alpha_condition_lhs(const ModelParams& p, int k, int delta) {
  return 8.0 * kE * delta * delta * std::pow(k, 4) * p.alpha;
}

bool alpha_condition(const Hypergraph& h, const Weights& lambda, int k, int delta) {
  auto rep = validate(h);
  if (k <= 0) k = rep.k_max;
  if (delta <= 0) delta = rep.delta;
  return alpha_condition_lhs(model_params(h, lambda, k, delta), k, delta) < 1.0;
}

bool fisher_condition(int k, int delta, double eps) {
  if (eps < 0.0) return false;
  bool eps_ok = eps < eps_max_fs(k, delta);
  double lhs = std::sqrt(1.0 + 2.0 * eps) * std::pow(2.0, -k / 2.0);
  double rhs = 1.0 / (2.0 * kSqrt2 * kE * delta * std::pow(k + 1, 2));
  return eps_ok && lhs < rhs;
}

CertificateReport certify(const Hypergraph& h, const Weights& lambda, double eps) {
  auto rep = validate(h);
  if (static_cast<int>(lambda.size()) != h.n) throw Error(ErrorKind::Domain, "lambda length does not match n");
  CertificateReport r;
  r.k = rep.k_max;
  r.delta = rep.delta;
  r.k_eff = effective_k(rep.k_max);
  r.delta_eff = effective_delta(rep.delta);
  r.eps = eps;
  r.eps_max = eps_max_ly(r.k_eff, r.delta_eff);
  r.eps_valid = eps > 0.0 && eps < r.eps_max;
  if (!r.eps_valid) r.reasons.push_back("eps outside (0, 1/(9 k^5 Delta^2))");
  r.lambda_c = lambda_c(r.k_eff, r.delta_eff, eps);
  auto reg = lee_yang_region(r.k_eff, r.delta_eff, eps);
  r.all_in_region = true;
  for (const cd& z : lambda) {
    r.in_region.push_back(in_region_ly(z, reg));
    r.all_in_region = r.all_in_region && r.in_region.back();
  }
  if (!r.all_in_region) r.reasons.push_back("some lambda_v lies outside the stadium around [0, lambda_c]");
  bool singular = std::any_of(lambda.begin(), lambda.end(), [](const cd& z) { return z == cd(-1.0); });
  if (singular) {
    r.reasons.push_back("lambda_v = -1");
  } else {
    r.params = model_params(h, lambda, r.k_eff, r.delta_eff);
    r.alpha_lhs = alpha_condition_lhs(r.params, r.k_eff, r.delta_eff);
    r.alpha_ok = r.alpha_lhs < 1.0;
  }
  if (!r.alpha_ok) r.reasons.push_back("alpha condition 8 e Delta^2 k^4 alpha < 1 fails");
  r.pass = r.eps_valid && r.all_in_region && r.alpha_ok;
  return r;
}

}  // namespace hz
