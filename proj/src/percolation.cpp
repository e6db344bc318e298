#include "hyperzero/percolation.hpp"

#include <algorithm>
#include <cmath>

#include "hyperzero/region.hpp"
#include "hyperzero/witness.hpp"

namespace hz {

int choose_gamma(int m, double eta, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::Domain, "eps must lie in (0, 1)");
  if (!(eta >= 0.0 && eta < 1.0)) throw Error(ErrorKind::Domain, "eta must lie in [0, 1)");
  if (m <= 0) return 1;
  return static_cast<int>(std::ceil(std::log2(4.0 * m / ((1.0 - eta) * eps)))) + 1;
}

namespace {

struct Context {
  int n;
  int gamma;
  long word_length;
  std::vector<std::vector<int>> inc;  // incident edges of H_i, ascending id
  const Hypergraph& h;
  std::vector<cd> b0, bbot;
  std::vector<long> root_times;
  long horizon;  // timestamps reach back at most this far
};

enum class Status { Done, NeedBit, Abort, Exhausted };

// One pass of Reveal / Percolation driven by a fixed prefix of r-bits.
struct Pass {
  const Context& ctx;
  const std::vector<unsigned char>& prefix;
  long cnt = 0;
  cd mass = 1.0;
  int b = 0;
  Status status = Status::Done;
  std::vector<signed char> r;     // -1 unknown, 0, or 1 for bottom; index -t
  std::vector<signed char> spin;  // -1 unknown

  Pass(const Context& c, const std::vector<unsigned char>& p)
      : ctx(c), prefix(p), r(c.horizon + 1, -1), spin(c.horizon + 1, -1) {}

  int vertex_of(long t) const { return static_cast<int>(mod_nn(t, ctx.n)); }

  // -1 means the pass has to stop
  int reveal(long t) {
    auto& slot = r[-t];
    if (slot >= 0) return slot;
    if (cnt >= ctx.word_length) {
      status = Status::Exhausted;
      return -1;
    }
    if (cnt >= static_cast<long>(prefix.size())) {
      status = Status::NeedBit;
      return -1;
    }
    slot = static_cast<signed char>(prefix[cnt++]);
    const int v = vertex_of(t);
    mass *= slot ? ctx.bbot[v] : ctx.b0[v];
    return slot;
  }

  bool percolate(long t) {
    if (spin[-t] >= 0) return true;
    if (r[-t] == 0) {
      spin[-t] = 0;
      return true;
    }
    const int v = vertex_of(t);
    bool blocked = false;
    for (int ei : ctx.inc[v]) {
      std::vector<long> others;
      for (int u : ctx.h.edges[ei])
        if (u != v) others.push_back(pred(u, t, ctx.n));
      std::sort(others.begin(), others.end());
      bool dead = false;
      for (long s : others) {
        int val = reveal(s);
        if (val < 0) return false;
        if (val == 0) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      if (++b > ctx.gamma) {
        status = Status::Abort;
        return false;
      }
      bool all_one = true;
      for (long s : others) {
        if (!percolate(s)) return false;
        if (spin[-s] == 0) all_one = false;
      }
      if (all_one) {
        blocked = true;
        break;  // the spin is settled; later edges cannot change it
      }
    }
    spin[-t] = blocked ? 0 : 1;
    return true;
  }

  // true when every timestamp of the root resolves to 1
  bool run() {
    for (long t : ctx.root_times) {
      int val = reveal(t);
      if (val < 0) return false;
      if (val == 0) return false;
    }
    for (long t : ctx.root_times) {
      if (!percolate(t)) return false;
      if (spin[-t] == 0) return false;
    }
    return true;
  }
};

}  // namespace

MarginalEstimate approx_marginal(const Hypergraph& h_i, const std::vector<int>& e, const Weights& lambda, int gamma,
                                 const PercolationOptions& opts) {
  auto rep = validate(h_i);
  if (static_cast<int>(lambda.size()) != h_i.n) throw Error(ErrorKind::Domain, "lambda length does not match n");
  if (e.empty()) throw Error(ErrorKind::Domain, "target edge is empty");
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] < 0 || e[j] >= h_i.n || (j > 0 && e[j] <= e[j - 1]))
      throw Error(ErrorKind::Structural, "target edge is not a sorted vertex set of H_i");
  if (gamma < 0) throw Error(ErrorKind::Domain, "gamma must be nonnegative");

  Hypergraph next = h_i;
  next.edges.push_back(e);
  auto rep_next = validate(next);
  const long k = opts.k > 0 ? opts.k : rep_next.k_max;
  const long delta = opts.delta > 0 ? opts.delta : rep_next.delta;
  (void)rep;

  Context ctx{h_i.n, gamma, gamma * k * (2 * delta * k * k), incidence(h_i), h_i, {}, {}, ts(e, 0, h_i.n), 0};
  double m_const = 0.0;
  for (const cd& l : lambda) {
    if (l == cd(-1.0)) throw Error(ErrorKind::Numeric, "lambda_v = -1");
    ctx.b0.push_back(1.0 / (1.0 + l));
    ctx.bbot.push_back(l / (1.0 + l));
    m_const = std::max(m_const, std::abs(ctx.b0.back()) + std::abs(ctx.bbot.back()));
  }
  // Each bad vertex moves at most n-1 steps back in time.
  ctx.horizon = static_cast<long>(gamma + 2) * h_i.n + h_i.n;

  MarginalEstimate est;
  est.word_length = ctx.word_length;
  est.root_degree_flag = 2 * delta * k * static_cast<long>(e.size()) - 1 > 2 * delta * k * k - 2;

  std::vector<std::vector<unsigned char>> stack;
  stack.emplace_back();
  while (!stack.empty()) {
    auto pre = std::move(stack.back());
    stack.pop_back();
    Pass pass(ctx, pre);
    bool all_one = pass.run();
    switch (pass.status) {
      case Status::Done:
        ++est.leaves;
        est.terminal_mass += pass.mass;
        if (all_one) est.allone_mass += pass.mass;
        break;
      case Status::Abort:
      case Status::Exhausted:
        ++est.aborted;
        est.aborted_abs += std::abs(pass.mass);
        est.terminal_mass += pass.mass;
        break;
      case Status::NeedBit: {
        const double rest = std::abs(pass.mass) * std::pow(m_const, static_cast<double>(ctx.word_length - pass.cnt));
        if (opts.prune_tol > 0.0 && rest < opts.prune_tol) {
          ++est.pruned;
          est.pruned_bound += rest;
          est.terminal_mass += pass.mass;
          break;
        }
        auto one = pre;
        one.push_back(1);
        pre.push_back(0);
        // zero branch first
        stack.push_back(std::move(one));
        stack.push_back(std::move(pre));
        break;
      }
    }
  }
  est.r_star = 1.0 - est.allone_mass;
  return est;
}

ApproxResult approx_partition(const Hypergraph& h, const Weights& lambda, double eps, double eta,
                              const ApproxOptions& opts) {
  auto rep = validate(h);
  if (static_cast<int>(lambda.size()) != h.n) throw Error(ErrorKind::Domain, "lambda length does not match n");
  ApproxResult res;
  res.gamma = opts.gamma ? *opts.gamma : choose_gamma(h.m(), eta, eps);
  const int k_eff = effective_k(rep.k_max), d_eff = effective_delta(rep.delta);
  res.region_eps = opts.region_eps > 0.0 ? opts.region_eps : 0.5 * eps_max_ly(k_eff, d_eff);
  res.counting_lambda_c = counting_lambda_c(k_eff, d_eff, res.region_eps, eta);
  res.kappa = 4L * rep.delta * rep.delta * rep.k_max * rep.k_max * rep.k_max * rep.k_max * res.gamma;
  auto reg = counting_region(k_eff, d_eff, res.region_eps, eta);
  res.certified = res.region_eps < eps_max_ly(k_eff, d_eff) &&
                  std::all_of(lambda.begin(), lambda.end(), [&](const cd& z) { return in_region_ly(z, reg); });

  cd z = 1.0;
  for (const cd& l : lambda) z *= 1.0 + l;
  PercolationOptions popts;
  popts.k = rep.k_max;
  popts.delta = rep.delta;
  popts.prune_tol = opts.prune_tol;
  for (int i = 0; i < h.m(); ++i) {
    auto est = approx_marginal(prefix(h, i), h.edges[i], lambda, res.gamma, popts);
    res.ratios.push_back(est.r_star);
    res.details.push_back(est);
    z *= est.r_star;
  }
  res.z_hat = z;
  return res;
}

}  // namespace hz
