#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hyperzero/clt.hpp"
#include "hyperzero/region.hpp"
#include "oracles.hpp"

using namespace hz;
using doctest::Approx;

namespace {

double binom(int n, int k) { return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)); }

// Binomial(n, 1/2) built directly; C(100, 50) does not fit the count vector.
SizeDistribution fair_binomial(int n) {
  SizeDistribution d;
  d.lambda = 1.0;
  for (int t = 0; t <= n; ++t) d.probs.push_back(binom(n, t) / std::pow(2.0, n));
  d.z = std::pow(2.0, n);
  d.mean = n / 2.0;
  d.variance = n / 4.0;
  return d;
}

}  // namespace

TEST_SUITE("clt") {
  TEST_CASE("size distributions") {
    auto d = size_distribution({6, {}}, 1.0);
    for (int t = 0; t <= 6; ++t) CHECK(d.probs[t] == Approx(binom(6, t) / 64));
    d = size_distribution({1, {}}, 1.0);
    CHECK(d.mean == Approx(0.5));
    CHECK(d.variance == Approx(0.25));
    d = size_distribution({2, {{0, 1}}}, 1.0);
    CHECK(d.probs[0] == Approx(1.0 / 3));
    CHECK(d.probs[1] == Approx(2.0 / 3));
    CHECK(d.probs[2] == 0.0);
    CHECK(d.mean == Approx(2.0 / 3));
    CHECK(d.variance == Approx(2.0 / 9));
    CHECK_THROWS_AS(size_distribution({2, {}}, 0.0), Error);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto h = random_instance(12, 8, 3, 3, seed);
      d = size_distribution(h, 0.7);
      double s = 0, m = 0, v = 0;
      for (double p : d.probs) s += p;
      for (std::size_t t = 0; t < d.probs.size(); ++t) m += t * d.probs[t];
      for (std::size_t t = 0; t < d.probs.size(); ++t) v += (t - m) * (t - m) * d.probs[t];
      CHECK(std::abs(s - 1) < 1e-12);
      CHECK(std::abs(m - d.mean) < 1e-10);
      CHECK(std::abs(v - d.variance) < 1e-10);
      // the probability identity i_t = P[X=t] Z / lambda^t
      auto a = oracle::size_counts(h);
      for (double lam : {0.05, 0.3, 1.0, 2.5}) {
        auto dl = size_distribution(h, lam);
        for (std::size_t t = 0; t < a.size(); ++t)
          CHECK(std::abs(dl.probs[t] * dl.z / std::pow(lam, t) - a[t]) <= 1e-10 * std::max<double>(1, a[t]));
      }
    }
  }

  TEST_CASE("Gaussian reference") {
    double s = 0;
    const double hstep = 1e-3;
    for (double x = -12; x <= 12; x += hstep) s += gauss_density(x) * hstep;
    CHECK(std::abs(s - 1) < 1e-8);
    CHECK(gauss_cdf(0.0) == Approx(0.5));
    CHECK(gauss_cdf(1.959963985) == Approx(0.975).epsilon(1e-9));
  }

  TEST_CASE("cumulants") {
    auto k = cumulants(size_distribution({20, {}}, 1.0), 6);
    CHECK(k[0] == Approx(10.0));
    CHECK(k[1] == Approx(5.0));
    CHECK(std::abs(k[2]) < 1e-10);
    CHECK(k[3] == Approx(-2.5));  // binomial: n p q (1 - 6 p q)
    k = cumulants(size_distribution({1, {}}, 1.0), 3);
    CHECK(std::abs(k[2]) < 1e-15);
    // single edge: third central moment of (1/3, 2/3, 0)
    k = cumulants(size_distribution({2, {{0, 1}}}, 1.0), 3);
    CHECK(k[2] == Approx(-2.0 / 27));
    set_unsafe(false);
    CHECK_THROWS_AS(cumulants(size_distribution({2, {}}, 1.0), 7), Error);
  }

  TEST_CASE("occupancy") {
    CHECK(occupancy({1, {}}, 1.0) == Approx(0.5));
    CHECK(occupancy({5, {{0, 1, 2}}}, 0.0) == 0.0);
    CHECK(occupancy({5, {{0, 1, 2}}}, 1e-9) < 1e-8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto h = random_instance(12, 10, 3, 3, seed);
      double prev = 0;
      for (int j = 1; j <= 40; ++j) {
        const double lam = 0.05 * j;
        const double a = occupancy(h, lam);
        CHECK(a >= prev);
        prev = a;
        // derivative n * dalpha/dlambda = Var / lambda
        const double dl = 1e-5;
        const double deriv = (occupancy(h, lam + dl) - occupancy(h, lam - dl)) / (2 * dl);
        const double var = size_distribution(h, lam).variance;
        CHECK(deriv == Approx(var / (lam * h.n)).epsilon(0.05));
      }
      const double lc = lambda_c(3, 3, 0.5 * eps_max_ly(3, 3));
      for (double f : {0.1, 0.5, 1.0}) CHECK(occupancy(h, f * lc) >= occupancy_lower_bound(f * lc, 3, 3));
    }
  }

  TEST_CASE("Kolmogorov and local gaps") {
    auto d = fair_binomial(100);
    CHECK(kolmogorov_gap(d) == Approx(0.0398).epsilon(0.01));
    CHECK(lclt_gap(d) >= 0.0);
    CHECK(lclt_gap(d) < 0.01);
    SizeDistribution point;
    point.probs = {1.0};
    CHECK_THROWS_AS(kolmogorov_gap(point), Error);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto g = size_distribution(random_instance(10, 5, 3, 3, seed), 0.4);
      CHECK(kolmogorov_gap(g) >= 0.0);
      CHECK(kolmogorov_gap(g) <= 1.0);
    }
    // local gap at the mode of Binomial(n, 1/2) shrinks like 1/sigma^2
    const double g1 = lclt_gap(fair_binomial(16));
    const double g2 = lclt_gap(fair_binomial(64));
    CHECK(g2 < g1 / 2);
  }

  TEST_CASE("characteristic function") {
    auto d = size_distribution(random_instance(12, 8, 3, 3, 1), 0.5);
    CHECK(std::abs(char_fn(d, 0.0) - 1.0) < 1e-15);
    for (double t = -10; t <= 10; t += 0.1) CHECK(std::abs(char_fn(d, t)) <= 1.0 + 1e-12);
    CHECK(fit_char_constant(d, 12) > 0.0);
  }

  TEST_CASE("Fourier inversion") {
    auto d = size_distribution({16, {}}, 1.0);
    CHECK(std::abs(fourier_inversion_P(d, 8) - binom(16, 8) / 65536) < 1e-6);
    double s = 0;
    for (int t = 0; t <= 16; ++t) s += fourier_inversion_P(d, t);
    CHECK(std::abs(s - 1) < 1e-6);
    auto h = random_instance(14, 8, 3, 3, 2);
    auto e = size_distribution(h, 0.8);
    for (int t = 0; t <= 14; ++t) CHECK(std::abs(fourier_inversion_P(e, t) - e.probs[t]) < 1e-6);
    CHECK_THROWS_AS(fourier_inversion_P(size_distribution({2, {}}, 1.0), 1), Error);
  }

  TEST_CASE("scattered sets") {
    CHECK(scattered_set({5, {}}) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(scattered_set({5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}}) == std::vector<int>{0, 4});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto h = random_instance(14, 6, 3, 3, seed);
      auto s = scattered_set(h);
      int ball = 0;
      for (int v = 0; v < h.n; ++v) {
        auto d = bfs_distances(h, v);
        int b = 0;
        for (int x : d) b += x <= 3;
        ball = std::max(ball, b);
      }
      CHECK(static_cast<int>(s.size()) >= (h.n + ball) / (1 + ball));
      for (int a : s)
        for (int b : s)
          if (a != b) CHECK(hyper_distance(h, a, b) >= 4);
    }
  }

  TEST_CASE("lambda star search") {
    auto ls = find_lambda_star({4, {}}, 2, 1.0);
    CHECK(std::abs(ls.achieved - 2.0) <= 0.5);
    CHECK(std::abs(4 * ls.lambda_star / (1 + ls.lambda_star) - ls.achieved) < 1e-12);
    CHECK_THROWS_AS(find_lambda_star({4, {}}, 0, 1.0), Error);
    try {
      find_lambda_star({4, {}}, 4, 1.0);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Search);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto h = random_instance(12, 8, 3, 3, seed);
      for (int t = 1; t <= 3; ++t) {
        auto r = find_lambda_star(h, t, 1.0);
        CHECK(std::abs(h.n * occupancy(h, r.lambda_star) - t) <= 0.5);
      }
    }
  }

  TEST_CASE("size-t counts") {
    SizeCountOptions exact;
    exact.lambda_cap = 1.0;
    exact.pipeline = false;
    auto r = count_size_t({4, {}}, 2, 0.1, exact);
    CHECK(r.i_t_hat == Approx(6.0));
    CHECK(count_size_t({3, {{0, 1, 2}}}, 3, 0.1, exact).i_t_hat == 0.0);

    SizeCountOptions pipe;
    pipe.lambda_cap = 1.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto h = random_instance(12, 8, 3, 3, seed);
      auto c = count_size_t(h, 2, 0.05, pipe);
      CHECK(c.exact == oracle::size_counts(h)[2]);
      if (c.pipeline) CHECK(c.rel_err <= 0.05);
    }
  }
}
