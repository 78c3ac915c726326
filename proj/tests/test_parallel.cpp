#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metrocross/fisher.hpp"
#include "metrocross/io.hpp"
#include "metrocross/parallel.hpp"
#include "metrocross/surface.hpp"

using namespace metrocross;

// The OpenMP path must reproduce the serial reference bitwise: every index
// writes its own slot and reductions run in index order.

namespace {

struct ModeGuard {
  ExecMode saved = default_exec_mode();
  ~ModeGuard() { set_default_exec_mode(saved); }
};

}  // namespace

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(257, 0);
  parallel_for(257, [&](std::ptrdiff_t i) { hits[std::size_t(i)]++; }, ExecMode::OpenMP);
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(parallel_for(8,
                               [&](std::ptrdiff_t i) {
                                 if (i == 3) throw ParamOutOfRange("boom");
                               },
                               ExecMode::OpenMP),
                  ParamOutOfRange);
}

TEST_CASE("multi-start optimizer: serial and OpenMP agree bitwise") {
  ModeGuard guard;
  const SiteMap sites{2, {0}, {0}};
  const KrausChannel ch = amplitude_damping(0.4);
  auto objective = [&](const ComplexVector& psi) { return qfi_phase(psi, ch, sites); };
  OptimizerOptions opt;
  opt.n_starts = 14;

  set_default_exec_mode(ExecMode::Serial);
  const ConvergenceReport serial = maximize(objective, 2, opt);
  set_default_exec_mode(ExecMode::OpenMP);
  const ConvergenceReport omp = maximize(objective, 2, opt);

  CHECK(serial.best_value == omp.best_value);
  CHECK(serial.spread == omp.spread);
  CHECK(serial.starts_converged == omp.starts_converged);
  REQUIRE(serial.best_params.size() == omp.best_params.size());
  for (std::size_t i = 0; i < serial.best_params.size(); ++i)
    CHECK(serial.best_params[i] == omp.best_params[i]);
}

TEST_CASE("surface grid: serial and OpenMP agree bitwise") {
  ModeGuard guard;
  OptimizerOptions opt;
  opt.n_starts = 8;
  set_default_exec_mode(ExecMode::Serial);
  const auto serial = surface(linspace(-0.6, 0.6, 3), linspace(0.0, 1.0, 3), opt);
  set_default_exec_mode(ExecMode::OpenMP);
  const auto omp = surface(linspace(-0.6, 0.6, 3), linspace(0.0, 1.0, 3), opt);
  REQUIRE(serial.size() == omp.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].ok == omp[i].ok);
    CHECK(serial[i].difference == omp[i].difference);
    CHECK(serial[i].qfi_parallel == omp[i].qfi_parallel);
    CHECK(serial[i].qfi_ancilla == omp[i].qfi_ancilla);
  }
}

TEST_CASE("sweep rows: serial and OpenMP agree bitwise") {
  ModeGuard guard;
  RunConfig cfg;
  cfg.channel = ChannelKind::PauliXY;
  cfg.n_uses = 2;
  cfg.strategies = {StrategyKind::Parallel, StrategyKind::AncillaAssisted};
  cfg.grid = GridSpec{0.1, 0.9, 0.2};
  cfg.optimizer.n_starts = 10;

  set_default_exec_mode(ExecMode::Serial);
  const auto serial = run_sweep(cfg);
  set_default_exec_mode(ExecMode::OpenMP);
  const auto omp = run_sweep(cfg);
  REQUIRE(serial.size() == omp.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].total_qfi == omp[i].total_qfi);
    CHECK(serial[i].block_qfi == omp[i].block_qfi);
    CHECK(serial[i].spread == omp[i].spread);
  }
}
