#include "hyperzero/interpolation.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "hyperzero/oracle.hpp"

namespace hz {

namespace {

void require_normalized(const std::vector<cd>& c) {
  if (c.empty() || std::abs(c[0] - 1.0) > 1e-12) throw Error(ErrorKind::Domain, "prefix must start with c_0 = 1");
}

}  // namespace

std::vector<cd> power_sums(const std::vector<cd>& c, int r) {
  require_normalized(c);
  if (r < 0) throw Error(ErrorKind::Domain, "order must be nonnegative");
  auto coef = [&](int j) { return j < static_cast<int>(c.size()) ? c[j] : cd(0.0); };
  std::vector<cd> p(r + 1, 0.0);
  for (int s = 1; s <= r; ++s) {
    cd acc = -static_cast<double>(s) * coef(s);
    for (int j = 1; j < s; ++j) acc -= coef(j) * p[s - j];
    p[s] = acc;
  }
  return p;
}

std::vector<cd> power_sums(const std::vector<cd>& c) { return power_sums(c, static_cast<int>(c.size()) - 1); }

std::vector<cd> coefficients_from_power_sums(const std::vector<cd>& p) {
  const int r = static_cast<int>(p.size()) - 1;
  std::vector<cd> c(std::max(r, 0) + 1, 0.0);
  c[0] = 1.0;
  for (int s = 1; s <= r; ++s) {
    cd acc = p[s];
    for (int j = 1; j < s; ++j) acc += c[j] * p[s - j];
    c[s] = -acc / static_cast<double>(s);
  }
  return c;
}

cd taylor_truncation(const std::vector<cd>& c, int r, cd x) {
  if (r >= static_cast<int>(c.size())) throw Error(ErrorKind::Domain, "order exceeds the coefficient prefix");
  auto p = power_sums(c, r);
  cd sum = 0.0, xs = 1.0;
  for (int s = 1; s <= r; ++s) {
    xs *= x;
    sum -= p[s] * xs / static_cast<double>(s);
  }
  return sum;
}

double truncation_bound(double n_roots, double delta, double abs_x, int r) {
  const double q = abs_x / (1.0 + delta);
  if (!(q < 1.0)) throw Error(ErrorKind::Domain, "|x| must be below 1 + delta");
  if (abs_x == 0.0) return 0.0;
  return n_roots * std::pow(q, r + 1) / ((r + 1) * (1.0 - q));
}

std::vector<cd> coeff_prefix_his(const Hypergraph& h, const Weights& dir, int r) {
  validate(h);
  require_guard(r <= limits::kOrder, "order r > 8");
  require_guard(h.n <= limits::kOracleN, "n > 26 for subset enumeration");
  if (r < 0) throw Error(ErrorKind::Domain, "order must be nonnegative");
  if (static_cast<int>(dir.size()) != h.n) throw Error(ErrorKind::Domain, "direction length does not match n");

  // edges whose largest vertex is v, checked when v joins the set
  std::vector<std::vector<Config>> closing(h.n);
  for (const auto& e : h.edges) {
    Config mask = 0;
    for (int u : e) mask |= Config{1} << u;
    closing[e.back()].push_back(mask);
  }
  std::vector<cd> c(r + 1, 0.0);
  auto rec = [&](auto&& self, int start, Config set, int size, cd w) -> void {
    c[size] += w;
    if (size == r) return;
    for (int v = start; v < h.n; ++v) {
      const Config next = set | (Config{1} << v);
      bool ok = true;
      for (Config m : closing[v])
        if ((next & m) == m) {
          ok = false;
          break;
        }
      if (ok) self(self, v + 1, next, size + 1, w * dir[v]);
    }
  };
  rec(rec, 0, 0, 0, 1.0);
  return c;
}

std::vector<cd> polynomial_roots(const std::vector<cd>& c) {
  double scale = 0.0;
  for (const cd& z : c) scale = std::max(scale, std::abs(z));
  int deg = static_cast<int>(c.size()) - 1;
  while (deg > 0 && std::abs(c[deg]) <= 1e-14 * scale) --deg;
  if (deg <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::Numeric, "companion eigenvalue solver failed");
  std::vector<cd> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

double min_root_modulus(const std::vector<cd>& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const cd& z : polynomial_roots(c)) best = std::min(best, std::abs(z));
  return best;
}

TruncationResult approx_log_partition(const Hypergraph& h, const Weights& dir, int r, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::Domain, "delta must be positive");
  require_guard(r <= limits::kOrder, "order r > 8");
  auto full = weighted_size_polynomial(h, dir);
  TruncationResult res;
  res.degree = static_cast<int>(polynomial_roots(full).size());
  res.min_root_modulus = min_root_modulus(full);
  if (res.min_root_modulus <= 1.0 + delta)
    throw Error(ErrorKind::Premise, "g has a root within |x| <= 1 + delta (min modulus " +
                                        std::to_string(res.min_root_modulus) + ")");
  auto prefix = coeff_prefix_his(h, dir, r);
  res.t_r = taylor_truncation(prefix, r, 1.0);
  res.bound = truncation_bound(res.degree, delta, 1.0, r);
  res.z_est = std::exp(res.t_r);
  return res;
}

}  // namespace hz
