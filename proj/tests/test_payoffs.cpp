#include <doctest.h>

#include <random>

#include "bpsis/payoffs.hpp"
#include "oracles.hpp"

using namespace bpsis;

TEST_SUITE("payoffs") {
  TEST_CASE("reward examples") {
    ModelParams p;
    SignalScheme s;
    auto f = rewards({0.5, 1.0, 0.0}, s, p);
    CHECK(f.s_u == doctest::Approx(-20.0).epsilon(1e-14));
    CHECK(f.s_p == doctest::Approx(-24.0).epsilon(1e-14));
    CHECK(f.i_u == -22.0);
    CHECK(f.i_p == -15.0);
  }

  TEST_CASE("margin examples") {
    ModelParams p;
    SignalScheme s;
    auto t = utilities({0.5, 1.0, 0.0}, s, p);
    CHECK(t.du_sbar == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(t.du_ibar == doctest::Approx(31.0 / 6.0).epsilon(1e-14));
    CHECK(t.du_sbar == doctest::Approx(t.u_sbar_p - t.u_sbar_u));
    CHECK(t.du_ibar == doctest::Approx(t.u_ibar_p - t.u_ibar_u));
  }

  TEST_CASE("margins match the truthful closed forms") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 5000; ++k) {
      ModelParams p = ModelParams::baseline(0.1 + 21.8 * u(rng));
      double ms = u(rng);
      PopulationState x{u(rng), u(rng), u(rng)};
      auto t = utilities(x, SignalScheme{ms, 1.0, 1.0}, p);
      CHECK(t.du_sbar == doctest::Approx(oracle::du_sbar(x.y, x.z_ibar, p)).epsilon(1e-12));
      CHECK(t.du_ibar == doctest::Approx(oracle::du_ibar(x.y, x.z_ibar, ms, p)).epsilon(1e-12));
    }
  }

  TEST_CASE("margins do not depend on z_sbar under mu_i = 1") {
    ModelParams p;
    SignalScheme s;
    auto a = utilities({0.3, 0.0, 0.4}, s, p);
    auto b = utilities({0.3, 1.0, 0.4}, s, p);
    CHECK(a.du_sbar == b.du_sbar);
    CHECK(a.du_ibar == b.du_ibar);
  }
}
