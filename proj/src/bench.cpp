#include "hyperzero/bench.hpp"

#include <chrono>
#include <random>

#include "hyperzero/interpolation.hpp"
#include "hyperzero/io.hpp"
#include "hyperzero/oracle.hpp"
#include "hyperzero/percolation.hpp"
#include "hyperzero/region.hpp"

namespace hz {

std::string bench_csv(const BenchOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::string out = "instance,n,m,k,delta,Z_exact,Z_perc,rel_err_perc,Z_interp,rel_err_interp,time_ms\n";
  for (int j = 0; j < opts.count; ++j) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = 6 + static_cast<int>(rng() % 7);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n * 3 / (2 * k) + 1));
    const auto h = random_instance(n, m, k, 3, rng());
    const auto rep = validate(h);
    const int ke = effective_k(rep.k_max), de = effective_delta(rep.delta);
    const double region_eps = 0.5 * eps_max_ly(ke, de);
    const double lc = counting_lambda_c(ke, de, region_eps, opts.eta);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Weights lambda(n);
    for (auto& l : lambda) l = cd(lc * unit(rng), region_eps * (2.0 * unit(rng) - 1.0) * 0.5);

    const auto t0 = std::chrono::steady_clock::now();
    const cd z = partition_ly(h, lambda);
    const cd zp = approx_partition(h, lambda, opts.eps, opts.eta).z_hat;
    std::string zi = "NA", ei = "NA";
    const double rho = min_root_modulus(weighted_size_polynomial(h, lambda));
    if (rho > 1.0) {
      const auto tr = approx_log_partition(h, lambda, std::min(opts.order, n), 0.999 * (rho - 1.0));
      zi = fmt_complex(tr.z_est);
      ei = fmt_real(std::abs(tr.z_est - z) / std::abs(z));
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    out += std::to_string(j) + "," + std::to_string(n) + "," + std::to_string(h.m()) + "," + std::to_string(rep.k_max) +
           "," + std::to_string(rep.delta) + "," + fmt_complex(z) + "," + fmt_complex(zp) + "," +
           fmt_real(std::abs(zp - z) / std::abs(z)) + "," + zi + "," + ei + "," + (opts.timing ? fmt_real(ms) : "NA") +
           "\n";
  }
  return out;
}

}  // namespace hz
