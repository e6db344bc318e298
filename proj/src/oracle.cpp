#include "hyperzero/oracle.hpp"

#include <bit>
#include <cmath>

#include "enumerate.hpp"

namespace hz {

namespace {

void check_lambda(const Hypergraph& h, const Weights& w, const char* what) {
  validate(h);
  if (static_cast<int>(w.size()) != h.n)
    throw Error(ErrorKind::Domain, std::string(what) + " has " + std::to_string(w.size()) +
                                       " entries, expected " + std::to_string(h.n));
}

void oracle_guard(const Hypergraph& h) {
  require_guard(h.n <= limits::kOracleN, "n=" + std::to_string(h.n) + " > " + std::to_string(limits::kOracleN));
  if (h.n > 63) throw Error(ErrorKind::Guard, "configurations are limited to 63 vertices");
}

void dense_guard(int n) {
  require_guard(n <= limits::kDenseN, "dense measure with n=" + std::to_string(n) + " > " +
                                          std::to_string(limits::kDenseN));
}

}  // namespace

ComplexMeasure ComplexMeasure::delta(int n, Config sigma) {
  ComplexMeasure mu(n);
  mu.w[sigma] = 1.0;
  return mu;
}

cd ComplexMeasure::total() const {
  cd s = 0.0;
  for (const cd& x : w) s += x;
  return s;
}

cd ComplexMeasure::measure_of(const std::vector<Config>& event) const {
  cd s = 0.0;
  for (Config c : event) s += w[c];
  return s;
}

std::vector<Config> ComplexMeasure::support(double tol) const {
  std::vector<Config> out;
  for (std::size_t c = 0; c < w.size(); ++c)
    if (std::abs(w[c]) > tol) out.push_back(c);
  return out;
}

double l1_distance(const ComplexMeasure& a, const ComplexMeasure& b) {
  if (a.w.size() != b.w.size()) throw Error(ErrorKind::Domain, "measures over different spaces");
  double s = 0.0;
  for (std::size_t c = 0; c < a.w.size(); ++c) s += std::abs(a.w[c] - b.w[c]);
  return s;
}

PartitionValue partition_ly_detail(const Hypergraph& h, const Weights& lambda) {
  check_lambda(h, lambda, "lambda");
  oracle_guard(h);
  PartitionValue pv;
  detail::for_each_independent(h, lambda, [&](Config, cd w) {
    pv.value += w;
    pv.abs_sum += std::abs(w);
  });
  return pv;
}

cd partition_ly(const Hypergraph& h, const Weights& lambda) { return partition_ly_detail(h, lambda).value; }

namespace {

struct FsWalker {
  const detail::EdgesByMin& ebm;
  const Weights& beta;
  PartitionValue pv;
  void run(int v, Config sigma, cd w) {
    if (v < 0) {
      pv.value += w;
      pv.abs_sum += std::abs(w);
      return;
    }
    run(v - 1, sigma, w);
    Config s1 = sigma | (Config{1} << v);
    cd w1 = w;
    const auto& masks = ebm.masks[v];
    for (std::size_t j = 0; j < masks.size(); ++j)
      if ((s1 & masks[j]) == masks[j]) w1 *= beta[ebm.ids[v][j]];
    run(v - 1, s1, w1);
  }
};

}  // namespace

PartitionValue partition_fs_detail(const Hypergraph& h, const Weights& beta) {
  validate(h);
  if (static_cast<int>(beta.size()) != h.m())
    throw Error(ErrorKind::Domain, "beta has " + std::to_string(beta.size()) + " entries, expected " +
                                       std::to_string(h.m()));
  oracle_guard(h);
  detail::EdgesByMin ebm(h);
  FsWalker walker{ebm, beta, {}};
  walker.run(h.n - 1, 0, cd(1.0));
  return walker.pv;
}

cd partition_fs(const Hypergraph& h, const Weights& beta) { return partition_fs_detail(h, beta).value; }

ComplexMeasure gibbs(const Hypergraph& h, const Weights& lambda) {
  check_lambda(h, lambda, "lambda");
  oracle_guard(h);
  dense_guard(h.n);
  ComplexMeasure mu(h.n);
  PartitionValue pv;
  detail::for_each_independent(h, lambda, [&](Config s, cd w) {
    mu.w[s] = w;
    pv.value += w;
    pv.abs_sum += std::abs(w);
  });
  if (pv.vanishing()) throw Error(ErrorKind::Numeric, "partition function vanishes numerically");
  for (cd& x : mu.w) x /= pv.value;
  return mu;
}

Marginal conditional_marginal(const Hypergraph& h, const Weights& lambda, int v, Config tau) {
  check_lambda(h, lambda, "lambda");
  if (v < 0 || v >= h.n) throw Error(ErrorKind::Domain, "vertex out of range");
  const Config vb = Config{1} << v;
  tau &= ~vb;
  bool blocked = false;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    bool contains_v = false;
    bool others_one = true;
    for (int u : h.edges[i]) {
      if (u == v)
        contains_v = true;
      else if (!bit(tau, u))
        others_one = false;
    }
    if (!contains_v && others_one)
      throw Error(ErrorKind::Domain, "partial configuration violates edge " + std::to_string(i));
    if (contains_v && others_one) blocked = true;
  }
  if (blocked) return {cd(1.0), cd(0.0)};
  const cd l = lambda[v];
  if (l == cd(-1.0)) throw Error(ErrorKind::Numeric, "lambda_v = -1 makes the marginal undefined");
  return {1.0 / (1.0 + l), l / (1.0 + l)};
}

cd edge_ratio(const Hypergraph& h, const Weights& lambda, int i) {
  if (i < 0 || i >= h.m()) throw Error(ErrorKind::Domain, "edge ratio index out of range");
  PartitionValue lo = partition_ly_detail(prefix(h, i), lambda);
  if (lo.vanishing()) throw Error(ErrorKind::Numeric, "prefix partition function vanishes");
  PartitionValue hi = partition_ly_detail(prefix(h, i + 1), lambda);
  return hi.value / lo.value;
}

cd marginal_allone(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s) {
  check_lambda(h, lambda, "lambda");
  oracle_guard(h);
  Config smask = 0;
  for (int v : s) {
    if (v < 0 || v >= h.n) throw Error(ErrorKind::Domain, "vertex out of range");
    smask |= Config{1} << v;
  }
  PartitionValue pv;
  cd hit = 0.0;
  detail::for_each_independent(h, lambda, [&](Config c, cd w) {
    pv.value += w;
    pv.abs_sum += std::abs(w);
    if ((c & smask) == smask) hit += w;
  });
  if (pv.vanishing()) throw Error(ErrorKind::Numeric, "partition function vanishes numerically");
  return hit / pv.value;
}

std::vector<std::uint64_t> size_coefficients(const Hypergraph& h) {
  validate(h);
  oracle_guard(h);
  std::vector<std::uint64_t> a(h.n + 1, 0);
  std::vector<int> ones(h.n, 1);
  detail::for_each_independent(h, ones, [&](Config c, int) { ++a[std::popcount(c)]; });
  return a;
}

std::vector<cd> weighted_size_polynomial(const Hypergraph& h, const Weights& lambda) {
  check_lambda(h, lambda, "lambda");
  oracle_guard(h);
  std::vector<cd> g(h.n + 1, cd(0.0));
  detail::for_each_independent(h, lambda, [&](Config c, cd w) { g[std::popcount(c)] += w; });
  return g;
}

Weights uniform_weights(int n, cd value) { return Weights(n, value); }

}  // namespace hz
