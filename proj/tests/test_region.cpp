#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hyperzero/fisher.hpp"
#include "hyperzero/oracle.hpp"
#include "hyperzero/region.hpp"

using namespace hz;
using doctest::Approx;

namespace {

// (lambda + eps)/(1 + lambda - eps) = q solved for lambda
double closed_form(int k, int delta, double eps, double scale = 1.0) {
  const double rhs = scale / (2.0 * std::numbers::sqrt2 * std::numbers::e * delta * k * k);
  const double q = std::pow(rhs, 2.0 / k);
  return (q * (1.0 - eps) - eps) / (1.0 - q);
}

}  // namespace

TEST_SUITE("region") {
  TEST_CASE("epsilon caps") {
    CHECK(eps_max_ly(2, 3) == Approx(1.0 / 2592));
    CHECK(eps_max_ly(3, 3) == Approx(1.0 / (9.0 * 243 * 9)));
    CHECK(eps_max_ly(3, 3) < eps_max_ly(2, 3));
    CHECK(eps_max_ly(2, 4) < eps_max_ly(2, 3));
    CHECK(eps_max_fs(2, 3) == Approx(1.0 / (16.0 * 243 * 9)));
  }

  TEST_CASE("critical lambda") {
    CHECK(lambda_c(2, 3, 1e-4) == Approx(closed_form(2, 3, 1e-4)).epsilon(1e-9));
    CHECK(lambda_c(2, 3, 1e-4) == Approx(0.010858).epsilon(1e-4));
    for (int k = 2; k <= 5; ++k)
      for (int d = 3; d <= 5; ++d) {
        const double eps = 0.5 * eps_max_ly(k, d);
        CHECK(std::abs(lambda_c(k, d, eps) - closed_form(k, d, eps)) < 1e-11);
        CHECK(std::abs(lambda_c(k, d, 0.0) - closed_form(k, d, 0.0)) < 1e-11);
      }
    const int k = 40;
    const int d = static_cast<int>(0.5 * std::pow(2.0, k / 2.0) / (2.0 * std::numbers::sqrt2 * std::numbers::e * k * k));
    CHECK(lambda_c(k, d, 0.5 * eps_max_ly(k, d)) >= 1.0);
    // eps so large that even lambda = 0 violates the inequality
    CHECK(lambda_c(2, 3, 0.05) == 0.0);
  }

  TEST_CASE("counting lambda") {
    CHECK(counting_lambda_c(2, 3, 1e-4, 1.0) == Approx(lambda_c(2, 3, 1e-4)).epsilon(1e-12));
    CHECK(counting_lambda_c(2, 3, 1e-4, 0.0) == 0.0);
    CHECK(std::abs(counting_lambda_c(2, 3, 1e-4, 0.25) - closed_form(2, 3, 1e-4, 0.5)) < 1e-11);
  }

  TEST_CASE("region membership") {
    auto reg = lee_yang_region(2, 3, 1e-4);
    CHECK(in_region_ly(0.0, reg));
    CHECK_FALSE(in_region_ly(reg.lambda_c + reg.eps + 0.01, reg));
    CHECK(in_region_ly(cd(0.5 * reg.lambda_c, reg.eps), reg));
    CHECK_FALSE(in_region_ly(cd(0.5 * reg.lambda_c, 1.01 * reg.eps), reg));
    CHECK(in_region_fs(0.5, 0.01));
    CHECK_FALSE(in_region_fs(1.02, 0.01));
    CHECK(in_region_fs(cd(0.3, 0.01), 0.01));
    CHECK(segment_distance(cd(-3.0, 4.0), 0.0, 1.0) == Approx(5.0));
  }

  TEST_CASE("model parameters") {
    Hypergraph h{4, {{0, 1}, {2, 3}}};
    auto p = model_params(h, Weights(4, 1.0));
    CHECK(p.N == Approx(0.25));
    CHECK(p.M == Approx(1.0));
    p = model_params(h, Weights(4, 0.0));
    CHECK(p.N == 0.0);
    CHECK(p.M == Approx(1.0));
    CHECK(p.alpha == 0.0);
    p = model_params(h, Weights(4, cd(0.0, 1.0)));
    CHECK(p.M == Approx(std::sqrt(2.0)));
    CHECK(p.N == Approx(0.5));
    CHECK_THROWS_AS(model_params(h, Weights(4, -1.0)), Error);
  }

  TEST_CASE("alpha and Fisher conditions") {
    Hypergraph h{6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}};
    CHECK(validate(h).delta == 3);
    CHECK(alpha_condition(h, Weights(6, 0.0)));
    CHECK_FALSE(alpha_condition(h, Weights(6, 1.0)));
    CHECK(alpha_condition_lhs(model_params(h, Weights(6, 1.0)), 2, 3) == Approx(8 * std::numbers::e * 9 * 16 * 0.25));
    CHECK_FALSE(fisher_condition(2, 3, 1e-6));
    CHECK(fisher_condition(40, 3, 0.0));
    CHECK_FALSE(fisher_condition(40, 3, eps_max_fs(40, 3)));
  }

  TEST_CASE("certificates") {
    Hypergraph h{6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}};
    CHECK(certify(h, Weights(6, 0.0), 1e-4).pass);
    auto rep = certify(h, Weights(6, 1.0), 1e-4);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.alpha_ok);
    CHECK_FALSE(rep.reasons.empty());
    CHECK_FALSE(certify(h, Weights(6, 0.0), 1.0).pass);
  }

  TEST_CASE("region samples satisfy the N and M bounds and give nonzero Z") {
    std::mt19937_64 rng(6);
    for (int k = 2; k <= 3; ++k) {
      const int d = 3;
      const double eps = 0.5 * eps_max_ly(k, d);
      const auto reg = lee_yang_region(k, d, eps);
      const double rhs = 1.0 / (2.0 * std::numbers::sqrt2 * std::numbers::e * d * k * k);
      // boundary of the stadium
      for (int j = 0; j <= 400; ++j) {
        const double th = 2.0 * std::numbers::pi * j / 400;
        const double x = (std::cos(th) >= 0 ? reg.lambda_c : 0.0) + eps * std::cos(th);
        const cd z(x, eps * std::sin(th));
        std::vector<int> e(k);
        for (int i = 0; i < k; ++i) e[i] = i;
        auto p = model_params({k, {e}}, Weights(k, z), k, d);
        CHECK(p.N <= rhs * rhs * (1 + 1e-9));
        CHECK(p.M <= (1 + eps) / (1 - eps) + 1e-12);
      }
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto h = random_instance(9, 5, k, d, seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        Weights lam(9);
        for (auto& z : lam) z = cd(reg.lambda_c * u(rng), eps * (2 * u(rng) - 1) * 0.7);
        auto rep = certify(h, lam, eps);
        CHECK(rep.all_in_region);
        if (rep.pass) {
          CHECK(rep.alpha_ok);
          for (int i = 0; i <= h.m(); ++i) CHECK_FALSE(partition_ly_detail(prefix(h, i), lam).vanishing());
        }
      }
    }
  }

  TEST_CASE("reduced Fisher instances satisfy the reduced parameter bounds") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const int k = 2 + seed % 2;
      auto h = random_instance(8, 4, k, 3, seed);
      const double eps = 0.5 * eps_max_fs(k, 3);
      Weights beta(h.m());
      for (auto& b : beta) b = cd(0.05 + 0.95 * u(rng), eps * (2 * u(rng) - 1));
      auto red = reduce(h, beta);
      auto p = model_params(red.h, red.lambda, k + 1, 3);
      CHECK(p.N <= (1 + 2 * eps) * std::pow(2.0, -k) + 1e-12);
      CHECK(p.M <= 1 + 4 * eps + 1e-12);
    }
  }
}
