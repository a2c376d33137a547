#include <doctest.h>

#include <random>

#include "bpsis/beliefs.hpp"
#include "oracles.hpp"

using namespace bpsis;

TEST_SUITE("beliefs") {
  TEST_CASE("posterior examples") {
    auto b = posterior(0.5, SignalScheme{0.8, 1.0, 1.0});
    CHECK(b.s_given_sbar == 1.0);
    CHECK(b.s_given_ibar == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK_FALSE(b.degenerate_sbar);
    CHECK_FALSE(b.degenerate_ibar);
    b = posterior(0.5, SignalScheme{0.8, 1.0, 1.25});
    CHECK(b.s_given_ibar == doctest::Approx(0.375 * 0.2 / (0.625 + 0.375 * 0.2)).epsilon(1e-14));
  }

  TEST_CASE("full disclosure reveals the state") {
    auto b = posterior(0.3, SignalScheme{1.0, 1.0, 1.0});
    CHECK(b.s_given_sbar == 1.0);
    CHECK(b.s_given_ibar == 0.0);
  }

  TEST_CASE("zero-probability signals") {
    // mu_s = 1, mu_i = 1: I-bar is sent only to infected agents; a certain
    // susceptible prior makes it a zero-probability signal.
    auto b = posterior(0.0, SignalScheme{1.0, 1.0, 1.0});
    CHECK(b.degenerate_ibar);
    CHECK(b.s_given_ibar == 1.0);
    CHECK(b.s_given_sbar == 1.0);
    b = posterior(1.0, SignalScheme{1.0, 1.0, 1.0});
    CHECK(b.degenerate_sbar);
    CHECK(b.s_given_sbar == 0.0);
    // mu_s = 0 and mu_i = 1: S-bar is never sent although the prior is interior.
    b = posterior(0.4, SignalScheme{0.0, 1.0, 1.0});
    CHECK(b.degenerate_sbar);
    CHECK(b.s_given_sbar == 1.0);
    CHECK(b.s_given_ibar == doctest::Approx(0.6));
  }

  TEST_CASE("prior is clamped") {
    auto b = posterior(0.9, SignalScheme{0.5, 0.5, 2.0});
    CHECK(b.s_given_sbar == 0.0);
    CHECK(b.s_given_ibar == 0.0);
  }

  TEST_CASE("posteriors are probabilities and match Bayes' rule") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 5000; ++k) {
      double y = u(rng);
      SignalScheme s{u(rng), u(rng), 0.5 + u(rng)};
      auto b = posterior(y, s);
      CHECK(b.s_given_sbar >= 0.0);
      CHECK(b.s_given_sbar <= 1.0);
      CHECK(b.s_given_ibar >= 0.0);
      CHECK(b.s_given_ibar <= 1.0);
      double prior = std::min(1.0, s.kappa * y);
      double p_sbar = s.mu_s * (1 - prior) + (1 - s.mu_i) * prior;
      if (p_sbar > 1e-12 && p_sbar < 1 - 1e-12) {
        // Law of total probability over the two signals.
        double total = b.s_given_sbar * p_sbar + b.s_given_ibar * (1 - p_sbar);
        CHECK(total == doctest::Approx(1 - prior).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("truthful scheme matches the closed form") {
    for (double y : {0.05, 0.3, 0.7}) {
      for (double ms : {0.1, 0.5, 0.9}) {
        auto b = posterior(y, SignalScheme{ms, 1.0, 1.0});
        CHECK(b.s_given_sbar == 1.0);
        CHECK(b.s_given_ibar == doctest::Approx(oracle::s_given_ibar(y, ms)).epsilon(1e-14));
      }
    }
  }
}
