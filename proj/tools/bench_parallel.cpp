// Timing comparison of the serial reference path against the OpenMP path on
// the two workloads that dominate real runs: multi-start state optimization
// and the phase-covariant surface grid. Also verifies the two paths agree
// bitwise, since every grid index owns its output slot and the reduction
// order is fixed.

#include <chrono>
#include <cstdio>
#include <vector>

#include "metrocross/fisher.hpp"
#include "metrocross/io.hpp"
#include "metrocross/parallel.hpp"
#include "metrocross/surface.hpp"

using namespace metrocross;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

std::vector<SweepRow> sweep_workload(ExecMode mode) {
  set_default_exec_mode(mode);
  RunConfig cfg;
  cfg.channel = ChannelKind::AmplitudeDamping;
  cfg.n_uses = 2;
  cfg.strategies = {StrategyKind::Parallel, StrategyKind::AncillaAssisted};
  cfg.grid = GridSpec{0.05, 0.95, 0.05};
  return run_sweep(cfg);
}

std::vector<SurfacePoint> surface_workload(ExecMode mode) {
  set_default_exec_mode(mode);
  OptimizerOptions opt;
  opt.n_starts = 12;
  return surface(linspace(-0.9, 0.9, 7), linspace(0.0, 1.0, 7), opt);
}

bool rows_equal(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].total_qfi != b[i].total_qfi || a[i].block_qfi != b[i].block_qfi ||
        a[i].spread != b[i].spread)
      return false;
  return true;
}

bool points_equal(const std::vector<SurfacePoint>& a, const std::vector<SurfacePoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].difference != b[i].difference || a[i].qfi_parallel != b[i].qfi_parallel) return false;
  return true;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", hardware_threads());
  std::printf("%-28s %10s %10s %8s %8s\n", "workload", "serial[s]", "openmp[s]", "speedup",
              "bitwise");

  std::vector<SweepRow> rows_serial, rows_omp;
  const double t_sweep_serial = timed([&] { rows_serial = sweep_workload(ExecMode::Serial); });
  const double t_sweep_omp = timed([&] { rows_omp = sweep_workload(ExecMode::OpenMP); });
  std::printf("%-28s %10.3f %10.3f %8.2f %8s\n", "sweep adc N=2 (19 pts)", t_sweep_serial,
              t_sweep_omp, t_sweep_serial / t_sweep_omp,
              rows_equal(rows_serial, rows_omp) ? "yes" : "NO");

  std::vector<SurfacePoint> pts_serial, pts_omp;
  const double t_surf_serial = timed([&] { pts_serial = surface_workload(ExecMode::Serial); });
  const double t_surf_omp = timed([&] { pts_omp = surface_workload(ExecMode::OpenMP); });
  std::printf("%-28s %10.3f %10.3f %8.2f %8s\n", "surface 7x7", t_surf_serial, t_surf_omp,
              t_surf_serial / t_surf_omp, points_equal(pts_serial, pts_omp) ? "yes" : "NO");

  const bool ok = rows_equal(rows_serial, rows_omp) && points_equal(pts_serial, pts_omp);
  return ok ? 0 : 1;
}
