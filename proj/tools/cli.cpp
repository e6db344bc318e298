#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>

#include "hyperzero/bench.hpp"
#include "hyperzero/clt.hpp"
#include "hyperzero/dynamics.hpp"
#include "hyperzero/fisher.hpp"
#include "hyperzero/interpolation.hpp"
#include "hyperzero/io.hpp"
#include "hyperzero/oracle.hpp"
#include "hyperzero/percolation.hpp"
#include "hyperzero/region.hpp"
#include "json.hpp"

namespace hz {

namespace {

using nlohmann::ordered_json;

// Round to the 12 digits used everywhere in the output.
double num(double x) { return std::stod(fmt_real(x)); }
ordered_json cjson(cd z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

struct Flags {
  std::string input, lambda, beta, out;
  double eps = 0.0, eta = 0.5, delta = 0.0, lambda_cap = 0.0;
  std::optional<int> gamma;
  int order = 8, t = 1, n = 10, m = 10, k = 3, max_degree = 3, count = 12;
  long T = 0;
  std::uint64_t seed = 0;
  bool unsafe = false, fs = false, timing = false, exact_mode = false;
};

Hypergraph input_graph(const Flags& f) {
  if (f.input.empty()) throw Error(ErrorKind::Usage, "--input is required");
  return load_json(read_file(f.input));
}

Weights lambda_of(const Flags& f, int n) {
  if (f.lambda.empty()) throw Error(ErrorKind::Usage, "--lambda is required");
  return load_weights_arg(f.lambda, "lambda", n);
}

void emit(const Flags& f, std::ostream& out, const std::string& text) {
  if (f.out.empty())
    out << text;
  else
    write_file(f.out, text);
}

double real_scalar(const Flags& f) {
  const cd z = parse_complex(f.lambda);
  if (z.imag() != 0.0) throw Error(ErrorKind::Usage, "a real --lambda is required here");
  return z.real();
}

void cmd_gen(const Flags& f, std::ostream& out) {
  emit(f, out, save_json(random_instance(f.n, f.m, f.k, f.max_degree, f.seed)) + "\n");
}

void cmd_exact(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  if (f.fs || !f.beta.empty()) {
    if (f.beta.empty()) throw Error(ErrorKind::Usage, "--beta is required with --fs");
    out << fmt_complex(partition_fs(h, load_weights_arg(f.beta, "beta", h.m()))) << "\n";
    return;
  }
  const auto lambda = lambda_of(f, h.n);
  out << fmt_complex(partition_ly(h, lambda)) << "\n";
  if (!f.out.empty()) write_file(f.out, measure_csv(gibbs(h, lambda)));
}

void cmd_certify(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  const auto rep = certify(h, lambda_of(f, h.n), f.eps);
  ordered_json j;
  j["pass"] = rep.pass;
  j["k"] = rep.k;
  j["delta"] = rep.delta;
  j["k_eff"] = rep.k_eff;
  j["delta_eff"] = rep.delta_eff;
  j["eps"] = num(rep.eps);
  j["eps_max"] = num(rep.eps_max);
  j["eps_valid"] = rep.eps_valid;
  j["lambda_c"] = num(rep.lambda_c);
  j["in_region"] = rep.in_region;
  j["N"] = num(rep.params.N);
  j["M"] = num(rep.params.M);
  j["alpha"] = num(rep.params.alpha);
  j["alpha_condition_lhs"] = num(rep.alpha_lhs);
  j["alpha_condition"] = rep.alpha_ok;
  j["reasons"] = rep.reasons;
  emit(f, out, j.dump(2) + "\n");
}

void cmd_reduce(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  if (f.beta.empty()) throw Error(ErrorKind::Usage, "--beta is required");
  const auto red = reduce(h, load_weights_arg(f.beta, "beta", h.m()));
  ordered_json j;
  j["hypergraph"] = ordered_json::parse(save_json(red.h));
  ordered_json lam = ordered_json::array();
  for (const cd& z : red.lambda) lam.push_back(cjson(z));
  j["lambda"] = lam;
  j["scale"] = cjson(red.scale);
  j["aux_of_edge"] = red.aux_of_edge;
  emit(f, out, j.dump(2) + "\n");
}

void cmd_dynamics(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  const auto lambda = lambda_of(f, h.n);
  require_guard(h.n <= limits::kDenseN, "n > 20 for dense measures");
  const long T = f.T > 0 ? f.T : 40L * h.n;
  // empty set against the greedy maximal independent set
  Config greedy = 0;
  for (int v = 0; v < h.n; ++v)
    if (is_independent(h, greedy | (Config{1} << v))) greedy |= Config{1} << v;
  auto a = ComplexMeasure::delta(h.n, 0), b = ComplexMeasure::delta(h.n, greedy);
  std::string csv = "sweep,gap\n";
  for (long step_no = 1; step_no <= T; ++step_no) {
    const long t = step_no - T;  // times -T+1..0
    a = step(a, t, h, lambda);
    b = step(b, t, h, lambda);
    if (step_no % h.n == 0 || step_no == T)
      csv += std::to_string((step_no + h.n - 1) / h.n) + "," + fmt_real(l1_distance(a, b)) + "\n";
  }
  emit(f, out, csv);
}

void cmd_approx(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  ApproxOptions opts;
  opts.gamma = f.gamma;
  const auto res = approx_partition(h, lambda_of(f, h.n), f.eps, f.eta, opts);
  ordered_json j;
  j["Z_hat"] = cjson(res.z_hat);
  j["gamma"] = res.gamma;
  j["kappa"] = res.kappa;
  j["certified"] = res.certified;
  ordered_json ratios = ordered_json::array();
  for (const cd& r : res.ratios) ratios.push_back(cjson(r));
  j["per_edge_ratios"] = ratios;
  emit(f, out, j.dump(2) + "\n");
}

void cmd_interpolate(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  const auto res = approx_log_partition(h, lambda_of(f, h.n), f.order, f.delta);
  ordered_json j;
  j["T_r_re"] = num(res.t_r.real());
  j["T_r_im"] = num(res.t_r.imag());
  j["bound"] = num(res.bound);
  j["Z_est"] = cjson(res.z_est);
  j["degree"] = res.degree;
  j["min_root_modulus"] = num(res.min_root_modulus);
  emit(f, out, j.dump(2) + "\n");
}

void cmd_clt(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  const auto d = size_distribution(h, real_scalar(f));
  ordered_json j;
  j["lambda"] = num(d.lambda);
  j["mean"] = num(d.mean);
  j["variance"] = num(d.variance);
  j["occupancy"] = num(d.mean / h.n);
  ordered_json kap = ordered_json::array();
  for (double x : cumulants(d, 4)) kap.push_back(num(x));
  j["cumulants"] = kap;
  if (d.variance > 0.0) {
    j["kolmogorov_gap"] = num(kolmogorov_gap(d));
    j["lclt_gap"] = num(lclt_gap(d));
  }
  out << j.dump(2) << "\n";
  if (!f.out.empty()) {
    std::string csv = "t,P_exact,gauss_density,gap\n";
    const double sd = d.sigma();
    for (std::size_t t = 0; t < d.probs.size(); ++t) {
      const double g = sd > 0.0 ? gauss_density((t - d.mean) / sd) / sd : 0.0;
      csv += std::to_string(t) + "," + fmt_real(d.probs[t]) + "," + fmt_real(g) + "," +
             fmt_real(std::abs(d.probs[t] - g)) + "\n";
    }
    write_file(f.out, csv);
  }
}

void cmd_count(const Flags& f, std::ostream& out) {
  const auto h = input_graph(f);
  SizeCountOptions opts;
  opts.lambda_cap = f.lambda_cap;
  opts.order = f.order;
  opts.pipeline = !f.exact_mode;
  const auto res = count_size_t(h, f.t, f.eta, opts);
  ordered_json j;
  j["t"] = f.t;
  j["i_t_hat"] = num(res.i_t_hat);
  j["exact"] = res.exact;
  j["rel_err"] = num(res.rel_err);
  j["lambda_star"] = num(res.lambda_star);
  j["P_t"] = num(res.p_t);
  j["Z"] = num(res.z);
  j["Z_log_bound"] = num(res.z_bound);
  j["pipeline"] = res.pipeline;
  j["method"] = res.method;
  emit(f, out, j.dump(2) + "\n");
}

void cmd_bench(const Flags& f, std::ostream& out) {
  BenchOptions opts;
  opts.seed = f.seed;
  opts.count = f.count;
  opts.eps = f.eps;
  opts.eta = f.eta;
  opts.order = f.order;
  opts.timing = f.timing;
  emit(f, out, bench_csv(opts));
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact and approximate partition functions of hypergraph independent sets", "hz"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_flag("--unsafe", f.unsafe, "lift the desk-scale size guards");
  app.add_option("--seed", f.seed, "seed for instance generation")->default_val(7);

  auto io = [&](CLI::App* c) {
    c->add_option("--input", f.input, "hypergraph JSON");
    c->add_option("--out", f.out, "output path");
  };
  auto lam = [&](CLI::App* c) { c->add_option("--lambda", f.lambda, "weights JSON path or scalar"); };

  auto* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--n", f.n)->default_val(10);
  gen->add_option("--m", f.m)->default_val(10);
  gen->add_option("--k", f.k)->default_val(3);
  gen->add_option("--delta", f.max_degree, "maximum degree cap")->default_val(3);
  gen->add_option("--out", f.out);

  auto* exact = app.add_subcommand("exact", "partition function by enumeration");
  io(exact);
  lam(exact);
  exact->add_option("--beta", f.beta, "edge weights JSON path or scalar");
  exact->add_flag("--fs", f.fs, "Fisher form (needs --beta)");
  exact->add_flag("--ly", "Lee-Yang form (default)");

  auto* cert = app.add_subcommand("certify", "check zero-freeness premises");
  io(cert);
  lam(cert);
  cert->add_option("--eps", f.eps)->required();

  auto* red = app.add_subcommand("reduce", "Fisher to Lee-Yang reduction");
  io(red);
  red->add_option("--beta", f.beta);

  auto* dyn = app.add_subcommand("dynamics", "coupled chains, l1 gap per sweep");
  io(dyn);
  lam(dyn);
  dyn->add_option("--T", f.T, "number of updates (default 40n)");

  auto* apx = app.add_subcommand("approx-count", "percolation counter");
  io(apx);
  lam(apx);
  apx->add_option("--eps", f.eps)->default_val(0.1);
  apx->add_option("--eta", f.eta)->default_val(0.5);
  apx->add_option("--gamma", f.gamma);

  auto* itp = app.add_subcommand("interpolate", "truncated Taylor series of log Z");
  io(itp);
  lam(itp);
  itp->add_option("--order", f.order)->default_val(8);
  itp->add_option("--delta", f.delta, "zero-free margin")->required();

  auto* clt = app.add_subcommand("clt", "size distribution statistics");
  io(clt);
  lam(clt);

  auto* cnt = app.add_subcommand("count-size-t", "number of independent sets of size t");
  io(cnt);
  cnt->add_option("--t", f.t)->required();
  cnt->add_option("--eta", f.eta)->default_val(0.1);
  cnt->add_option("--lambda-cap", f.lambda_cap, "largest lambda searched (default min(1, lambda_c))");
  cnt->add_option("--order", f.order)->default_val(8);
  cnt->add_flag("--exact", f.exact_mode, "use the exact distribution and Z");

  auto* bench = app.add_subcommand("bench", "compare the counters on a generated corpus");
  bench->add_option("--out", f.out);
  bench->add_option("--count", f.count)->default_val(12);
  bench->add_option("--eps", f.eps)->default_val(0.1);
  bench->add_option("--eta", f.eta)->default_val(0.5);
  bench->add_option("--order", f.order)->default_val(8);
  bench->add_flag("--timing", f.timing, "fill in time_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "hz: usage: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Usage);
  }

  set_unsafe(f.unsafe);
  try {
    if (*gen) cmd_gen(f, out);
    if (*exact) cmd_exact(f, out);
    if (*cert) cmd_certify(f, out);
    if (*red) cmd_reduce(f, out);
    if (*dyn) cmd_dynamics(f, out);
    if (*apx) cmd_approx(f, out);
    if (*itp) cmd_interpolate(f, out);
    if (*clt) cmd_clt(f, out);
    if (*cnt) cmd_count(f, out);
    if (*bench) cmd_bench(f, out);
  } catch (const Error& e) {
    set_unsafe(false);
    err << "hz: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    set_unsafe(false);
    err << "hz: internal: " << e.what() << "\n";
    return 1;
  }
  set_unsafe(false);
  return 0;
}

}  // namespace hz
