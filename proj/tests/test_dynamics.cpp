#include <doctest.h>

#include <cmath>

#include "bpsis/dynamics.hpp"
#include "bpsis/equilibrium.hpp"
#include "bpsis/errors.hpp"
#include "bpsis/payoffs.hpp"

using namespace bpsis;

TEST_SUITE("dynamics") {
  TEST_CASE("rule names") {
    CHECK(parse_rule("smith") == RevisionRule::Smith);
    CHECK(parse_rule("logit") == RevisionRule::Logit);
    CHECK(to_string(RevisionRule::Logit) == "logit");
    CHECK_THROWS_AS(parse_rule("replicator"), ConfigError);
  }

  TEST_CASE("config validation") {
    CHECK(validate(DynamicsConfig{}).empty());
    DynamicsConfig c;
    c.dt = 0.0;
    c.record_stride = 0;
    CHECK(validate(c).size() == 2);
  }

  TEST_CASE("Smith field") {
    auto r = smith_field(-4.0, 2.0, {0.5, 0.25, 0.5});
    CHECK(r.dz_sbar == doctest::Approx(0.75 * 4.0));
    CHECK(r.dz_ibar == doctest::Approx(-0.5 * 2.0));
    r = smith_field(3.0, -1.0, {0.5, 0.0, 1.0});
    CHECK(r.dz_sbar == 0.0);
    CHECK(r.dz_ibar == 0.0);
  }

  TEST_CASE("logit field") {
    CHECK(logit_field(1.0, 0.0, 0.0, 1.0) == doctest::Approx(1.0 / (1.0 + std::exp(-1.0))));
    CHECK(logit_field(5.0, 5.0, 0.5, 3.0) == 0.0);
    // Large payoff gaps do not overflow.
    double d = logit_field(0.0, 1e6, 0.2, 10.0);
    CHECK(std::isfinite(d));
    CHECK(d == doctest::Approx(-0.2));
  }

  TEST_CASE("coupled field example") {
    auto r = coupled_field({0.01, 0.5, 0.5}, ModelParams::baseline(15.0), SignalScheme{},
                           DynamicsConfig{});
    CHECK(r.dy == doctest::Approx(0.0021270625).epsilon(1e-12));
  }

  TEST_CASE("equilibria are rest points of the Smith dynamic") {
    for (double c : {1.5, 5.0, 15.0, 21.0, 21.85}) {
      auto p = ModelParams::baseline(c);
      auto r = classify_sne(p, SignalScheme{});
      auto f = coupled_field(r.state, p, SignalScheme{}, DynamicsConfig{});
      CAPTURE(c);
      CHECK(f.sup_norm() < 1e-9);
    }
  }

  TEST_CASE("integration converges and stays in the unit cube") {
    auto p = ModelParams::baseline(21.0);
    auto tr = integrate({0.01, 0.5, 0.5}, p, SignalScheme{}, DynamicsConfig{});
    CHECK(tr.converged);
    CHECK(std::isfinite(tr.t_converge));
    CHECK(tr.t_converge == doctest::Approx(tr.times.back()));
    CHECK(tr.max_clamp < 1e-9);
    for (const auto& x : tr.states) {
      CHECK(x.y >= 0.0);
      CHECK(x.y <= 1.0);
      CHECK(x.z_sbar >= 0.0);
      CHECK(x.z_sbar <= 1.0);
      CHECK(x.z_ibar >= 0.0);
      CHECK(x.z_ibar <= 1.0);
    }
    CHECK(tr.times.front() == 0.0);
    CHECK(tr.states.front() == PopulationState{0.01, 0.5, 0.5});
    CHECK(tr.states.back() == tr.final);
  }

  TEST_CASE("a rest point converges at t = 0") {
    auto p = ModelParams::baseline(15.0);
    auto tr = integrate({49.0 / 89.0, 1.0, 0.0}, p, SignalScheme{}, DynamicsConfig{});
    CHECK(tr.converged);
    CHECK(tr.t_converge == 0.0);
    CHECK(tr.steps == 0);
  }

  TEST_CASE("short horizon reports non-convergence") {
    DynamicsConfig c;
    c.t_max = 0.05;
    auto tr = integrate({0.01, 0.5, 0.5}, ModelParams{}, SignalScheme{}, c);
    CHECK_FALSE(tr.converged);
    CHECK(std::isnan(tr.t_converge));
    CHECK(tr.steps == 5);
    CHECK(tr.times.back() == doctest::Approx(0.05));
  }

  TEST_CASE("recording stride") {
    DynamicsConfig c;
    c.t_max = 1.0;
    c.record_stride = 10;
    auto tr = integrate({0.01, 0.5, 0.5}, ModelParams{}, SignalScheme{}, c);
    CHECK(tr.times.size() == 11);
    CHECK(tr.times[3] == doctest::Approx(0.3));
  }

  TEST_CASE("logit at very low rationality stays near uniform choice") {
    DynamicsConfig c;
    c.rule = RevisionRule::Logit;
    c.lambda = 0.01;
    auto tr = integrate({0.01, 0.5, 0.5}, ModelParams::baseline(15.0), SignalScheme{}, c);
    CHECK(tr.converged);
    CHECK(std::abs(tr.final.z_sbar - 0.5) < 0.1);
    CHECK(std::abs(tr.final.z_ibar - 0.5) < 0.1);
  }

  TEST_CASE("Smith limit is Nash stationary") {
    auto p = ModelParams::baseline(5.0);
    auto tr = integrate({0.3, 0.9, 0.9}, p, SignalScheme{}, DynamicsConfig{});
    REQUIRE(tr.converged);
    CHECK(verify_sne(tr.final, p, SignalScheme{}, 1e-6).pass);
  }
}
