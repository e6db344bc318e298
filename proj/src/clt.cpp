#include "hyperzero/clt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperzero/interpolation.hpp"
#include "hyperzero/oracle.hpp"
#include "hyperzero/region.hpp"

namespace hz {

double SizeDistribution::sigma() const { return std::sqrt(variance); }

SizeDistribution distribution_from_coefficients(const std::vector<std::uint64_t>& a, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::Domain, "lambda must be positive");
  SizeDistribution d;
  d.lambda = lambda;
  d.a = a;
  // log-space terms keep large lambda finite
  std::vector<double> logt(a.size(), -INFINITY);
  double top = -INFINITY;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > 0) {
      logt[t] = std::log(static_cast<double>(a[t])) + t * std::log(lambda);
      top = std::max(top, logt[t]);
    }
  double s = 0.0;
  d.probs.assign(a.size(), 0.0);
  for (std::size_t t = 0; t < a.size(); ++t) {
    d.probs[t] = std::exp(logt[t] - top);
    s += d.probs[t];
  }
  for (double& p : d.probs) p /= s;
  d.z = std::exp(top) * s;
  for (std::size_t t = 0; t < a.size(); ++t) d.mean += t * d.probs[t];
  for (std::size_t t = 0; t < a.size(); ++t) d.variance += (t - d.mean) * (t - d.mean) * d.probs[t];
  return d;
}

SizeDistribution size_distribution(const Hypergraph& h, double lambda) {
  return distribution_from_coefficients(size_coefficients(h), lambda);
}

double gauss_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
double gauss_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

std::vector<double> cumulants(const SizeDistribution& d, int s_max) {
  require_guard(s_max <= limits::kSMax, "s_max > 6");
  if (s_max < 1) throw Error(ErrorKind::Domain, "s_max must be at least 1");
  // raw moments, then kappa_s = m_s - sum_{j=1}^{s-1} C(s-1, j-1) kappa_j m_{s-j}
  // applied to the centred variable so that cancellation stays small
  std::vector<double> m(s_max + 1, 0.0);
  for (std::size_t t = 0; t < d.probs.size(); ++t) {
    double x = t - d.mean, xs = 1.0;
    for (int s = 0; s <= s_max; ++s) {
      m[s] += xs * d.probs[t];
      xs *= x;
    }
  }
  std::vector<double> kc(s_max + 1, 0.0);
  for (int s = 1; s <= s_max; ++s) {
    double acc = m[s];
    double binom = 1.0;  // C(s-1, j-1)
    for (int j = 1; j < s; ++j) {
      acc -= binom * kc[j] * m[s - j];
      binom = binom * (s - j) / j;
    }
    kc[s] = acc;
  }
  std::vector<double> out(kc.begin() + 1, kc.end());
  out[0] = d.mean;  // shifting only moves kappa_1
  return out;
}

double occupancy(const Hypergraph& h, double lambda) {
  if (h.n == 0) throw Error(ErrorKind::Domain, "empty vertex set");
  if (lambda == 0.0) return 0.0;
  return size_distribution(h, lambda).mean / h.n;
}

double occupancy_lower_bound(double lambda, int k, int delta) {
  return 1.0 - (1.0 + 1.0 / (4.0 * std::numbers::e * delta * std::pow(k, 3))) / (1.0 + lambda);
}

namespace {

void require_spread(const SizeDistribution& d) {
  if (!(d.variance > 0.0)) throw Error(ErrorKind::Domain, "sigma = 0");
}

}  // namespace

double kolmogorov_gap(const SizeDistribution& d) {
  require_spread(d);
  const double sd = d.sigma();
  double gap = 0.0, cdf = 0.0;
  for (std::size_t t = 0; t < d.probs.size(); ++t) {
    const double phi = gauss_cdf((t - d.mean) / sd);
    gap = std::max(gap, std::abs(cdf - phi));  // left limit
    cdf += d.probs[t];
    gap = std::max(gap, std::abs(cdf - phi));
  }
  return std::min(gap, 1.0);
}

double lclt_gap(const SizeDistribution& d) {
  require_spread(d);
  const double sd = d.sigma();
  double gap = 0.0;
  for (std::size_t t = 0; t < d.probs.size(); ++t)
    gap = std::max(gap, std::abs(d.probs[t] - gauss_density((t - d.mean) / sd) / sd));
  return gap;
}

cd char_fn(const SizeDistribution& d, double t) {
  const double sd = d.sigma();
  if (sd == 0.0) return 1.0;
  cd sum = 0.0;
  for (std::size_t s = 0; s < d.probs.size(); ++s) sum += d.probs[s] * std::polar(1.0, t * (s - d.mean) / sd);
  return sum;
}

double fit_char_constant(const SizeDistribution& d, int n, int grid) {
  require_spread(d);
  const double sd = d.sigma();
  double c = INFINITY;
  for (int j = -grid; j <= grid; ++j) {
    if (j == 0) continue;
    const double t = std::numbers::pi * sd * j / grid;
    const double mod = std::abs(char_fn(d, t));
    c = std::min(c, -std::log(mod) * d.variance / (d.lambda * n * t * t));
  }
  return c;
}

namespace {

template <class F>
double simpson_inversion(F&& phi_x, int t, int panels) {
  if (panels % 2) ++panels;
  const double a = -std::numbers::pi, hstep = 2.0 * std::numbers::pi / panels;
  cd sum = 0.0;
  for (int j = 0; j <= panels; ++j) {
    const double th = a + j * hstep;
    const double wgt = (j == 0 || j == panels) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    sum += wgt * phi_x(th) * std::polar(1.0, -th * t);
  }
  return (sum * hstep / 3.0).real() / (2.0 * std::numbers::pi);
}

}  // namespace

double fourier_inversion_P(const SizeDistribution& d, int t, int panels) {
  if (!(d.sigma() > 1.0)) throw Error(ErrorKind::Domain, "Fourier inversion needs sigma > 1");
  // phi_Y(u) e^{-i u y} du / (2 pi sigma) with u = sigma theta
  auto phi_x = [&](double th) { return char_fn(d, th * d.sigma()) * std::polar(1.0, th * d.mean); };
  return simpson_inversion(phi_x, t, panels);
}

std::vector<int> scattered_set(const Hypergraph& h) {
  validate(h);
  std::vector<char> removed(h.n, 0);
  std::vector<int> out;
  for (int v = 0; v < h.n; ++v) {
    if (removed[v]) continue;
    out.push_back(v);
    auto dist = bfs_distances(h, v);
    for (int u = 0; u < h.n; ++u)
      if (dist[u] <= 3) removed[u] = 1;
  }
  return out;
}

LambdaStar find_lambda_star(const Hypergraph& h, int t, double lambda_cap) {
  validate(h);
  if (t < 1) throw Error(ErrorKind::Domain, "t must be at least 1");
  if (!(lambda_cap > 0.0)) throw Error(ErrorKind::Domain, "lambda cap must be positive");
  const auto a = size_coefficients(h);
  const int n = h.n;
  LambdaStar res;
  for (int j = 0; j < 64; ++j) {
    const double lam = lambda_cap * std::pow(10.0, -4.0 * (63 - j) / 63.0);
    auto d = distribution_from_coefficients(a, lam);
    res.zeta = std::max(res.zeta, d.variance / (lam * n));
  }
  const int s_max = static_cast<int>(std::ceil(2.0 * res.zeta * n * lambda_cap));
  for (int s = 1; s <= s_max; ++s) {
    const double lam = s / (2.0 * res.zeta * n);
    const double occ = distribution_from_coefficients(a, lam).mean;
    if (std::abs(occ - t) <= 0.5) {
      res.lambda_star = lam;
      res.s = s;
      res.achieved = occ;
      return res;
    }
  }
  throw Error(ErrorKind::Search, "no grid point reaches n*alpha within 1/2 of t = " + std::to_string(t) +
                                     " below lambda cap " + std::to_string(lambda_cap));
}

SizeCount count_size_t(const Hypergraph& h, int t, double eta, const SizeCountOptions& opts) {
  auto rep = validate(h);
  if (!(eta > 0.0 && eta < 1.0)) throw Error(ErrorKind::Domain, "eta must lie in (0, 1)");
  double cap = opts.lambda_cap;
  if (cap <= 0.0) {
    const int k_eff = effective_k(rep.k_max), d_eff = effective_delta(rep.delta);
    cap = std::min(1.0, lambda_c(k_eff, d_eff, 0.5 * eps_max_ly(k_eff, d_eff)));
  }
  const auto a = size_coefficients(h);
  SizeCount res;
  res.exact = t >= 0 && t < static_cast<int>(a.size()) ? a[t] : 0;
  if (t > 0 && res.exact == 0) {
    // no independent set of that size: P[X = t] = 0 at every lambda
    res.method = "exact";
    return res;
  }
  auto ls = find_lambda_star(h, t, cap);
  res.lambda_star = ls.lambda_star;
  const auto d = distribution_from_coefficients(a, ls.lambda_star);

  if (!opts.pipeline) {
    res.p_t = d.probs[t];
    res.z = d.z;
    res.i_t_hat = res.p_t * res.z / std::pow(ls.lambda_star, t);
    res.method = "exact";
  } else {
    const bool fourier = d.sigma() > 1.0;
    if (fourier) {
      res.p_t = fourier_inversion_P(d, t);
      res.method = "fourier";
    } else {
      res.p_t = d.probs[t];
      res.method = "exact-P";
    }
    // log Z(lambda*) from the truncated series of g(x) = Z(x lambda*)
    const Weights dir = uniform_weights(h.n, ls.lambda_star);
    auto full = weighted_size_polynomial(h, dir);
    const double rho = min_root_modulus(full);
    const int r = std::min(opts.order, h.n);
    if (rho > 1.0) {
      auto prefix = coeff_prefix_his(h, dir, r);
      res.z = std::exp(taylor_truncation(prefix, r, 1.0)).real();
      res.z_bound = truncation_bound(static_cast<double>(polynomial_roots(full).size()), rho - 1.0, 1.0, r);
      res.pipeline = fourier;
      res.method += "+interpolation";
    } else {
      res.z = d.z;
      res.method += "+exact-Z";
    }
    res.i_t_hat = res.p_t * res.z / std::pow(ls.lambda_star, t);
  }
  res.rel_err = res.exact ? std::abs(res.i_t_hat - static_cast<double>(res.exact)) / res.exact : res.i_t_hat;
  return res;
}

}  // namespace hz
