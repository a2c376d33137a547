#pragma once

// Brute-force search for stationary Nash equilibria on a (z_sbar, z_ibar)
// grid. Each grid point is completed with its endemic y and tested against
// the SNE conditions. Because a grid rarely lands exactly on an interior
// indifference point, an interior coordinate is also accepted when its
// decision margin changes sign between this grid point and the next one
// along that axis.

#include <vector>

#include "bpsis/model.hpp"

namespace bpsis {

struct ScanOptions {
  double step = 1e-3;
  double tol = 1e-3;
};

/// OpenMP kernel. Results are ordered by (z_sbar, z_ibar) grid index.
std::vector<PopulationState> scan_sne_candidates(const ModelParams& p, const SignalScheme& s,
                                                 const ScanOptions& opt = {});

/// Single-threaded reference; must match the parallel kernel exactly.
std::vector<PopulationState> scan_sne_candidates_serial(const ModelParams& p,
                                                        const SignalScheme& s,
                                                        const ScanOptions& opt = {});

}  // namespace bpsis
