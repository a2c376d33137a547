#include <doctest.h>

#include <cmath>

#include "bpsis/equilibrium.hpp"
#include "bpsis/scan.hpp"

using namespace bpsis;

TEST_SUITE("scan") {
  TEST_CASE("parallel kernel matches the serial reference") {
    for (double c : {5.0, 21.0}) {
      auto p = ModelParams::baseline(c);
      ScanOptions o{2e-3, 1e-3};
      CHECK(scan_sne_candidates(p, SignalScheme{}, o) ==
            scan_sne_candidates_serial(p, SignalScheme{}, o));
    }
  }

  TEST_CASE("scan finds the interior case-2 equilibrium") {
    auto p = ModelParams::baseline(5.0);
    auto r = classify_sne(p, SignalScheme{});
    auto hits = scan_sne_candidates(p, SignalScheme{});
    REQUIRE_FALSE(hits.empty());
    for (const auto& h : hits) {
      CHECK(std::abs(h.z_sbar - r.state.z_sbar) <= 2e-3);
      CHECK(h.z_ibar == 0.0);
    }
  }

  TEST_CASE("scan outputs are endemic") {
    auto p = ModelParams::baseline(21.85);
    for (const auto& h : scan_sne_candidates(p, SignalScheme{}))
      CHECK(h.y == doctest::Approx(endemic_equilibrium(h.z_sbar, h.z_ibar, SignalScheme{}, p)));
  }
}
