#include "hyperzero/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <tuple>

namespace hz {

namespace {

// For each vertex, masks of e \ {v} over the edges e containing v.
struct Scan {
  int n;
  std::vector<std::vector<Config>> others;
  explicit Scan(const Hypergraph& h) : n(h.n), others(h.n) {
    for (const auto& e : h.edges) {
      Config mask = 0;
      for (int v : e) mask |= Config{1} << v;
      for (int v : e) others[v].push_back(mask & ~(Config{1} << v));
    }
  }
  bool blocked(int v, Config sigma) const {
    for (Config m : others[v])
      if ((sigma & m) == m) return true;
    return false;
  }
  // Deterministic update rule driven by r.
  Config run(Config s, const RSeq& rho) const {
    for (long t = -rho.T + 1; t <= 0; ++t) {
      const int v = static_cast<int>(mod_nn(t, n));
      const Config vb = Config{1} << v;
      if (!rho.is_bot(t) || blocked(v, s))
        s &= ~vb;
      else
        s |= vb;
    }
    return s;
  }
};

void check_sizes(const Hypergraph& h, const Weights& lambda) {
  validate(h);
  if (static_cast<int>(lambda.size()) != h.n) throw Error(ErrorKind::Domain, "lambda length does not match n");
  if (h.n < 1) throw Error(ErrorKind::Domain, "dynamics needs at least one vertex");
  if (h.n > 63) throw Error(ErrorKind::Guard, "configurations are limited to 63 vertices");
}

void check_rho(const RSeq& rho) {
  if (rho.T < 0 || rho.T > 64) throw Error(ErrorKind::Domain, "r-sequence length must be in 0..64");
}

ComplexMeasure step_impl(const ComplexMeasure& mu, long t, const Scan& scan, const std::vector<char>& indep,
                         const Weights& lambda) {
  const int v = static_cast<int>(mod_nn(t, scan.n));
  const Config vb = Config{1} << v;
  const cd l = lambda[v];
  const bool singular = l == cd(-1.0);
  const cd p0 = singular ? cd(0.0) : 1.0 / (1.0 + l);
  const cd p1 = singular ? cd(0.0) : l / (1.0 + l);
  ComplexMeasure out(mu.n);
  for (Config s = 0; s < mu.w.size(); ++s) {
    const cd w = mu.w[s];
    if (w == cd(0.0)) continue;
    if (!indep[s]) throw Error(ErrorKind::Numeric, "measure is supported on a non-independent configuration");
    const Config s0 = s & ~vb;
    if (scan.blocked(v, s)) {
      out.w[s0] += w;
    } else {
      if (singular) throw Error(ErrorKind::Numeric, "lambda_v = -1 makes the update undefined");
      out.w[s0] += w * p0;
      out.w[s | vb] += w * p1;
    }
  }
  return out;
}

std::vector<char> independence_table(const Hypergraph& h) {
  std::vector<char> indep(std::size_t{1} << h.n);
  auto masks = edge_masks(h);
  for (Config s = 0; s < indep.size(); ++s) {
    bool ok = true;
    for (Config m : masks)
      if ((s & m) == m) {
        ok = false;
        break;
      }
    indep[s] = ok;
  }
  return indep;
}

void check_measure(const ComplexMeasure& mu, const Hypergraph& h) {
  if (mu.n != h.n || mu.w.size() != (std::size_t{1} << h.n))
    throw Error(ErrorKind::Domain, "measure does not match the hypergraph");
  require_guard(h.n <= limits::kDenseN, "dense measure with n=" + std::to_string(h.n));
}

// Calls f(rho, mass) for every r-sequence of nonzero mass.
template <class F>
void for_each_rho(long T, const Hypergraph& h, const Weights& lambda, F f) {
  require_guard(T <= limits::kEnumT, "T=" + std::to_string(T) + " > " + std::to_string(limits::kEnumT));
  if (T > 40) throw Error(ErrorKind::Guard, "r-enumeration is limited to T <= 40");
  auto b = baseline(lambda);
  std::vector<int> vert(T);
  for (long j = 0; j < T; ++j) vert[j] = static_cast<int>(mod_nn(-T + 1 + j, h.n));
  const std::uint64_t count = std::uint64_t{1} << T;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    cd mass = 1.0;
    bool zero = false;
    for (long j = 0; j < T; ++j) {
      const cd f_j = ((bits >> j) & 1u) ? b.bbot[vert[j]] : b.b0[vert[j]];
      if (f_j == cd(0.0)) {
        zero = true;
        break;
      }
      mass *= f_j;
    }
    if (zero) continue;
    f(RSeq{T, bits}, mass);
  }
}

Config restrict_to(Config sigma, const std::vector<int>& s) {
  Config out = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (bit(sigma, s[i])) out |= Config{1} << i;
  return out;
}

std::uint64_t time_mask(const std::vector<long>& times, long T) {
  std::uint64_t m = 0;
  for (long t : times) m |= std::uint64_t{1} << (t + T - 1);
  return m;
}

}  // namespace

Baseline baseline(const Weights& lambda) {
  Baseline b;
  for (const cd& l : lambda) {
    if (l == cd(-1.0)) throw Error(ErrorKind::Numeric, "lambda_v = -1 has no baseline decomposition");
    b.b0.push_back(1.0 / (1.0 + l));
    b.bbot.push_back(l / (1.0 + l));
  }
  return b;
}

ComplexMeasure step(const ComplexMeasure& mu, long t, const Hypergraph& h, const Weights& lambda) {
  check_sizes(h, lambda);
  check_measure(mu, h);
  Scan scan(h);
  return step_impl(mu, t, scan, independence_table(h), lambda);
}

ComplexMeasure run_chain(const ComplexMeasure& mu0, long T, const Hypergraph& h, const Weights& lambda,
                         const StepObserver& observer) {
  check_sizes(h, lambda);
  check_measure(mu0, h);
  if (T < 0) throw Error(ErrorKind::Domain, "negative horizon");
  Scan scan(h);
  auto indep = independence_table(h);
  ComplexMeasure mu = mu0;
  for (long t = -T + 1; t <= 0; ++t) {
    mu = step_impl(mu, t, scan, indep, lambda);
    if (observer) observer(t, mu);
  }
  return mu;
}

Config simulate_given_r(Config sigma_init, const RSeq& rho, const Hypergraph& h) {
  validate(h);
  check_rho(rho);
  if (!is_independent(h, sigma_init)) throw Error(ErrorKind::Domain, "initial configuration is not independent");
  Scan scan(h);
  return scan.run(sigma_init, rho);
}

cd r_mass(const RSeq& rho, const Hypergraph& h, const Weights& lambda) {
  check_sizes(h, lambda);
  check_rho(rho);
  auto b = baseline(lambda);
  cd mass = 1.0;
  for (long t = -rho.T + 1; t <= 0; ++t) {
    const int v = static_cast<int>(mod_nn(t, h.n));
    mass *= rho.is_bot(t) ? b.bbot[v] : b.b0[v];
  }
  return mass;
}

ComplexMeasure final_measure_by_enumeration(Config sigma_init, long T, const Hypergraph& h, const Weights& lambda) {
  check_sizes(h, lambda);
  require_guard(h.n <= limits::kDenseN, "dense measure with n=" + std::to_string(h.n));
  if (!is_independent(h, sigma_init)) throw Error(ErrorKind::Domain, "initial configuration is not independent");
  Scan scan(h);
  ComplexMeasure out(h.n);
  for_each_rho(T, h, lambda, [&](const RSeq& rho, cd mass) {
    out.w[scan.run(sigma_init, rho)] += mass;
  });
  return out;
}

cd event_measure_by_enumeration(Config sigma_init, long T, const std::vector<Config>& event, const Hypergraph& h,
                                const Weights& lambda) {
  return final_measure_by_enumeration(sigma_init, T, h, lambda).measure_of(event);
}

BadStructures bad_structures(const RSeq& rho, const WitnessWindow& w) {
  if (rho.T != w.T) throw Error(ErrorKind::Domain, "r-sequence and window use different horizons");
  BadStructures bs;
  std::vector<char> bad(w.size(), 0);
  for (int i = 0; i < w.size(); ++i) {
    bool all_bot = true;
    for (long t : w.vertices[i].times)
      if (!rho.is_bot(t)) {
        all_bot = false;
        break;
      }
    if (all_bot || i == w.root) {
      bad[i] = 1;
      bs.v_bad.push_back(i);
    }
  }
  std::vector<char> seen(w.size(), 0);
  std::deque<int> q{w.root};
  seen[w.root] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    bs.c_bad.push_back(u);
    for (int x : w.adj[u])
      if (bad[x] && !seen[x]) {
        seen[x] = 1;
        q.push_back(x);
      }
  }
  std::sort(bs.c_bad.begin(), bs.c_bad.end());
  bs.t_bad = construct_2tree(w.adj, bs.c_bad, w.root);
  return bs;
}

std::vector<int> event_vbl(int n, const std::vector<Config>& event) {
  std::set<Config> in(event.begin(), event.end());
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    const Config vb = Config{1} << v;
    for (Config c : event)
      if (!in.count(c ^ vb)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

std::vector<Config> initial_support(const Hypergraph& h, const Weights& lambda) {
  check_sizes(h, lambda);
  require_guard(h.n <= limits::kDenseN, "support enumeration with n=" + std::to_string(h.n));
  std::vector<Config> out;
  for (Config s = 0; s < (Config{1} << h.n); ++s) {
    if (!is_independent(h, s)) continue;
    bool nonzero = true;
    for (int v = 0; v < h.n; ++v)
      if (bit(s, v) && lambda[v] == cd(0.0)) nonzero = false;
    if (nonzero) out.push_back(s);
  }
  return out;
}

bool is_witness(const RSeq& rho, const std::vector<Config>& event, const Hypergraph& h, const Weights& lambda) {
  std::set<Config> a(event.begin(), event.end());
  int seen = -1;
  for (Config s : initial_support(h, lambda)) {
    int hit = a.count(simulate_given_r(s, rho, h)) ? 1 : 0;
    if (seen >= 0 && hit != seen) return false;
    seen = hit;
  }
  return true;
}

bool is_small_tree(std::size_t tree_size, long T, int n) {
  return static_cast<double>(tree_size) <= static_cast<double>(T) / (2.0 * n) - 2.0;
}

namespace {

struct RhoInfo {
  BadStructures bs;
  bool small;
  std::uint64_t root_bits, i_bits;
};

RhoInfo describe(const RSeq& rho, const WitnessWindow& w, int n) {
  RhoInfo info{bad_structures(rho, w), false, 0, 0};
  info.small = is_small_tree(info.bs.t_bad.size(), rho.T, n);
  info.root_bits = rho.bot & time_mask(w.vertices[w.root].times, rho.T);
  info.i_bits = rho.bot & ((std::uint64_t{1} << n) - 1);
  return info;
}

}  // namespace

ZeroOne zero_one_check(const Hypergraph& h, const Weights& lambda, long T, const std::vector<Config>& event,
                       Config sigma_init, const RSeq& representative) {
  check_sizes(h, lambda);
  auto s = event_vbl(h.n, event);
  if (s.empty()) {
    // constant event
    return event.empty() ? ZeroOne::Zero : ZeroOne::One;
  }
  auto w = build_window(h, s, T);
  auto key = describe(representative, w, h.n);
  std::set<Config> a(event.begin(), event.end());
  int value = -1;
  bool violation = false;
  for_each_rho(T, h, lambda, [&](const RSeq& rho, cd) {
    auto info = describe(rho, w, h.n);
    if (info.bs.c_bad != key.bs.c_bad || info.root_bits != key.root_bits) return;
    if (!key.small && info.i_bits != key.i_bits) return;
    int hit = a.count(simulate_given_r(sigma_init, rho, h)) ? 1 : 0;
    if (value >= 0 && hit != value) violation = true;
    value = hit;
  });
  if (violation) return ZeroOne::Violation;
  if (value < 0) return ZeroOne::Empty;
  return value ? ZeroOne::One : ZeroOne::Zero;
}

ZeroOneAudit zero_one_audit(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s, long T) {
  check_sizes(h, lambda);
  auto w = build_window(h, s, T);
  auto starts = initial_support(h, lambda);
  Scan scan(h);
  using SmallKey = std::tuple<std::vector<int>, std::uint64_t>;
  using LargeKey = std::tuple<std::vector<int>, std::uint64_t, std::uint64_t, Config>;
  std::map<SmallKey, Config> small_groups;
  std::map<LargeKey, Config> large_groups;
  std::set<SmallKey> bad_small;
  std::set<LargeKey> bad_large;
  ZeroOneAudit audit;
  std::vector<Config> outcome(starts.size());
  for_each_rho(T, h, lambda, [&](const RSeq& rho, cd) {
    auto info = describe(rho, w, h.n);
    for (std::size_t i = 0; i < starts.size(); ++i) {
      outcome[i] = restrict_to(scan.run(starts[i], rho), w.s);
    }
    if (info.small) {
      ++audit.rho_small;
      ++audit.witness_checked;
      for (Config o : outcome)
        if (o != outcome.front()) {
          ++audit.witness_violations;
          break;
        }
      SmallKey key{info.bs.c_bad, info.root_bits};
      for (Config o : outcome) {
        auto [it, fresh] = small_groups.emplace(key, o);
        if (!fresh && it->second != o) bad_small.insert(key);
      }
    } else {
      ++audit.rho_large;
      for (std::size_t i = 0; i < starts.size(); ++i) {
        LargeKey key{info.bs.c_bad, info.root_bits, info.i_bits, starts[i]};
        auto [it, fresh] = large_groups.emplace(key, outcome[i]);
        if (!fresh && it->second != outcome[i]) bad_large.insert(key);
      }
    }
  });
  audit.groups_small = static_cast<long>(small_groups.size());
  audit.groups_large = static_cast<long>(large_groups.size());
  audit.violations_small = static_cast<long>(bad_small.size());
  audit.violations_large = static_cast<long>(bad_large.size());
  return audit;
}

std::vector<TreeMass> bad_tree_masses(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s,
                                      long T) {
  check_sizes(h, lambda);
  auto w = build_window(h, s, T);
  const std::uint64_t root_mask = time_mask(w.vertices[w.root].times, T);
  std::map<std::vector<int>, std::pair<std::vector<int>, cd>> by_component;
  for_each_rho(T, h, lambda, [&](const RSeq& rho, cd mass) {
    if ((rho.bot & root_mask) != root_mask) return;
    auto bs = bad_structures(rho, w);
    auto& slot = by_component[bs.c_bad];
    slot.first = bs.t_bad;
    slot.second += mass;
  });
  std::map<std::vector<int>, double> by_tree;
  for (const auto& [c, entry] : by_component) by_tree[entry.first] += std::abs(entry.second);
  std::vector<TreeMass> out;
  for (const auto& [tree, m] : by_tree) out.push_back({tree, m});
  return out;
}

double large_tree_event_mass(const Hypergraph& h, const Weights& lambda, const std::vector<int>& s, long T,
                             Config sigma_init, Config tau_on_s) {
  check_sizes(h, lambda);
  if (!is_independent(h, sigma_init)) throw Error(ErrorKind::Domain, "initial configuration is not independent");
  auto w = build_window(h, s, T);
  Scan scan(h);
  cd total = 0.0;
  for_each_rho(T, h, lambda, [&](const RSeq& rho, cd mass) {
    auto bs = bad_structures(rho, w);
    if (is_small_tree(bs.t_bad.size(), T, h.n)) return;
    Config st = scan.run(sigma_init, rho);
    if (restrict_to(st, w.s) == tau_on_s) total += mass;
  });
  return std::abs(total);
}

double convergence_gap(const ComplexMeasure& mu1, const ComplexMeasure& mu2, long T, const Hypergraph& h,
                       const Weights& lambda) {
  return l1_distance(run_chain(mu1, T, h, lambda), run_chain(mu2, T, h, lambda));
}

}  // namespace hz
