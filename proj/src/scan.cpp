#include "bpsis/scan.hpp"

#include <cmath>
#include <cstddef>

#include "bpsis/errors.hpp"
#include "bpsis/payoffs.hpp"

namespace bpsis {

namespace {

struct GridPoint {
  double y = 0.0;
  double du_sbar = 0.0;
  double du_ibar = 0.0;
  bool endemic = false;
};

class Grid {
 public:
  Grid(const ModelParams& p, const SignalScheme& s, const ScanOptions& opt)
      : p_(p), s_(s), opt_(opt), n_(static_cast<std::size_t>(std::llround(1.0 / opt.step)) + 1),
        points_(n_ * n_) {
    if (!(opt.step > 0.0 && opt.step <= 0.5)) throw ConfigError("scan step must lie in (0, 0.5]");
  }

  std::size_t n() const { return n_; }

  double coord(std::size_t i) const {
    return i + 1 == n_ ? 1.0 : static_cast<double>(i) * opt_.step;
  }

  void fill(std::size_t i, std::size_t j) {
    GridPoint& g = points_[i * n_ + j];
    const double zs = coord(i);
    const double zi = coord(j);
    try {
      g.y = endemic_equilibrium(zs, zi, s_, p_);
      g.endemic = true;
    } catch (const NonEndemicError&) {
      g.endemic = false;
      return;
    }
    const auto t = utilities({g.y, zs, zi}, s_, p_);
    g.du_sbar = t.du_sbar;
    g.du_ibar = t.du_ibar;
  }

  bool accepts(std::size_t i, std::size_t j) const {
    const GridPoint& g = points_[i * n_ + j];
    if (!g.endemic) return false;
    const GridPoint* next_s = i + 1 < n_ ? &points_[(i + 1) * n_ + j] : nullptr;
    const GridPoint* next_i = j + 1 < n_ ? &points_[i * n_ + j + 1] : nullptr;
    return condition(i, g.du_sbar, next_s ? next_s->du_sbar : g.du_sbar) &&
           condition(j, g.du_ibar, next_i ? next_i->du_ibar : g.du_ibar);
  }

  PopulationState state(std::size_t i, std::size_t j) const {
    return {points_[i * n_ + j].y, coord(i), coord(j)};
  }

 private:
  bool condition(std::size_t k, double du, double du_next) const {
    if (k == 0) return du >= -opt_.tol;
    if (k + 1 == n_) return du <= opt_.tol;
    if (std::abs(du) <= opt_.tol) return true;
    return std::signbit(du) != std::signbit(du_next);
  }

  const ModelParams& p_;
  const SignalScheme& s_;
  ScanOptions opt_;
  std::size_t n_;
  std::vector<GridPoint> points_;
};

}  // namespace

std::vector<PopulationState> scan_sne_candidates(const ModelParams& p, const SignalScheme& s,
                                                 const ScanOptions& opt) {
  Grid grid(p, s, opt);
  const auto n = static_cast<long long>(grid.n());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) grid.fill(i, j);

  std::vector<char> hit(static_cast<std::size_t>(n * n), 0);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) hit[i * n + j] = grid.accepts(i, j) ? 1 : 0;

  std::vector<PopulationState> out;
  for (long long k = 0; k < n * n; ++k)
    if (hit[k]) out.push_back(grid.state(k / n, k % n));
  return out;
}

std::vector<PopulationState> scan_sne_candidates_serial(const ModelParams& p,
                                                        const SignalScheme& s,
                                                        const ScanOptions& opt) {
  Grid grid(p, s, opt);
  const std::size_t n = grid.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grid.fill(i, j);
  std::vector<PopulationState> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (grid.accepts(i, j)) out.push_back(grid.state(i, j));
  return out;
}

}  // namespace bpsis
