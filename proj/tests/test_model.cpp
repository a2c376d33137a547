#include <doctest.h>

#include <random>

#include "bpsis/errors.hpp"
#include "bpsis/model.hpp"
#include "oracles.hpp"

using namespace bpsis;

TEST_SUITE("model") {
  TEST_CASE("baseline table passes validation and the classifier assumptions") {
    auto r = validate_params(ModelParams::baseline(15.0), SignalScheme{});
    CHECK(r.ok());
    CHECK(r.assumption1);
  }

  TEST_CASE("range violations are listed one per constraint") {
    ModelParams p;
    p.alpha = 1.0;
    p.beta_u = 0.4;
    SignalScheme s;
    s.mu_s = 1.5;
    auto r = validate_params(p, s);
    CHECK(r.violations.size() == 3);
  }

  TEST_CASE("classifier assumption flag") {
    ModelParams p;
    p.gamma = 0.3;  // alpha*beta_p = 0.225
    CHECK_FALSE(validate_params(p, SignalScheme{}).assumption1);
    p = ModelParams::baseline(22.0);
    CHECK_FALSE(validate_params(p, SignalScheme{}).assumption1);
    CHECK_FALSE(validate_params(ModelParams{}, SignalScheme{0.8, 0.9, 1.0}).assumption1);
  }

  TEST_CASE("action marginals") {
    auto m = action_marginals(1.0, 0.0, SignalScheme{0.8, 1.0, 1.0});
    CHECK(m.z_s == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(m.z_i == 0.0);
    m = action_marginals(0.3, 0.7, SignalScheme{0.6, 0.9, 1.0});
    CHECK(m.z_s == doctest::Approx(0.3 * 0.6 + 0.7 * 0.4));
    CHECK(m.z_i == doctest::Approx(0.7 * 0.9 + 0.3 * 0.1));
  }

  TEST_CASE("effective beta examples") {
    ModelParams p;
    SignalScheme s;
    CHECK(effective_beta(1.0, 0.0, s, p) == doctest::Approx(0.445).epsilon(1e-14));
    CHECK(effective_beta(0.0, 0.0, s, p) == doctest::Approx(0.225).epsilon(1e-14));
    CHECK(effective_beta(1.0, 1.0, s, p) == doctest::Approx(0.65).epsilon(1e-14));
  }

  TEST_CASE("endemic equilibrium examples") {
    ModelParams p;
    SignalScheme s;
    CHECK(endemic_equilibrium(0.0, 0.0, s, p) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK(endemic_equilibrium(1.0, 1.0, s, p) == doctest::Approx(9.0 / 13.0).epsilon(1e-14));
    CHECK(endemic_equilibrium(1.0, 0.0, s, p) == doctest::Approx(49.0 / 89.0).epsilon(1e-14));
    p.gamma = 0.3;
    CHECK_THROWS_AS(endemic_equilibrium(0.0, 0.0, s, p), NonEndemicError);
  }

  TEST_CASE("SIS field example and zeros") {
    ModelParams p;
    SignalScheme s;
    CHECK(sis_vector_field({0.5, 1.0, 1.0}, s, p) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(sis_vector_field({0.0, 0.3, 0.4}, s, p) == 0.0);
    double y = endemic_equilibrium(0.3, 0.4, s, p);
    CHECK(std::abs(sis_vector_field({y, 0.3, 0.4}, s, p)) < 1e-15);
  }

  TEST_CASE("effective beta matches the truthful closed form and is monotone") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ModelParams p;
    for (int k = 0; k < 2000; ++k) {
      double zs = u(rng), zi = u(rng), ms = u(rng);
      SignalScheme s{ms, 1.0, 1.0};
      double b = effective_beta(zs, zi, s, p);
      CHECK(b == doctest::Approx(oracle::beta_eff(zs, zi, ms, p)).epsilon(1e-13));
      CHECK(b >= p.alpha * p.beta_p - 1e-15);
      CHECK(b <= p.beta_u + 1e-15);
      double d = 1e-3;
      if (zs + d <= 1.0) CHECK(effective_beta(zs + d, zi, s, p) >= b);
      if (zi + d <= 1.0) CHECK(effective_beta(zs, zi + d, s, p) >= b);
    }
  }
}
