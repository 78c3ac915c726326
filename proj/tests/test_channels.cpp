#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "metrocross/channels.hpp"

using namespace metrocross;

namespace {

ComplexMatrix random_density(int n_qubits, std::mt19937_64& gen) {
  const int dim = 1 << n_qubits;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(u(gen), u(gen));
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

ComplexMatrix single_qubit_action(const KrausChannel& ch, const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

}  // namespace

TEST_CASE("pauli_xy limits and direct expansion") {
  std::mt19937_64 gen(5);
  const ComplexMatrix rho = random_density(1, gen);
  CHECK(max_abs(single_qubit_action(pauli_xy(0.0), rho) - rho) < 1e-14);

  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;
  CHECK(max_abs(single_qubit_action(pauli_xy(1.0), ground) - excited) < 1e-14);

  // eta = 0.5 on |+><+|: (1-eta) rho + eta/2 (X rho X + Y rho Y), expanded
  // by hand to I/2 + (1-eta) X/2.
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  ComplexMatrix expected(2, 2);
  expected << 0.5, 0.25, 0.25, 0.5;
  CHECK(max_abs(single_qubit_action(pauli_xy(0.5), plus) - expected) < 1e-14);
}

TEST_CASE("depolarizing limits and action") {
  std::mt19937_64 gen(6);
  const ComplexMatrix rho = random_density(1, gen);
  CHECK(max_abs(single_qubit_action(depolarizing(1.0), rho) - ComplexMatrix::Identity(2, 2) / 2.0) <
        1e-14);
  CHECK(max_abs(single_qubit_action(depolarizing(0.0), rho) - rho) < 1e-14);

  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  const ComplexMatrix out = single_qubit_action(depolarizing(0.4), ground);
  CHECK(std::abs(out(0, 0) - 0.8) < 1e-14);
  CHECK(std::abs(out(1, 1) - 0.2) < 1e-14);

  // action equals (1-eta) rho + eta I/2 for a random state
  const double eta = 0.37;
  CHECK(max_abs(single_qubit_action(depolarizing(eta), rho) -
                ((1 - eta) * rho + eta * ComplexMatrix::Identity(2, 2) / 2.0)) < 1e-14);
}

TEST_CASE("amplitude damping limits and completeness") {
  std::mt19937_64 gen(7);
  const ComplexMatrix rho = random_density(1, gen);
  CHECK(max_abs(single_qubit_action(amplitude_damping(0.0), rho) - rho) < 1e-14);

  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;
  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  CHECK(max_abs(single_qubit_action(amplitude_damping(1.0), excited) - ground) < 1e-14);

  const KrausChannel ch = amplitude_damping(0.37);
  CHECK(max_abs(ch.kraus[0].adjoint() * ch.kraus[0] + ch.kraus[1].adjoint() * ch.kraus[1] -
                ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("channel parameters outside [0,1] are rejected") {
  CHECK_THROWS_AS(pauli_xy(-0.1), ParamOutOfRange);
  CHECK_THROWS_AS(depolarizing(1.1), ParamOutOfRange);
  CHECK_THROWS_AS(amplitude_damping(2.0), ParamOutOfRange);
}

TEST_CASE("phase_covariant corners") {
  std::mt19937_64 gen(8);
  const ComplexMatrix rho = random_density(1, gen);

  // noiseless corner
  const KrausChannel id_like = phase_covariant({0.0, 1.0, 1.0});
  CHECK(max_abs(single_qubit_action(id_like, rho) - rho) < 1e-12);

  // full relaxation corner: |1><1| -> |0><0|
  const KrausChannel relax = phase_covariant({1.0 - 1e-9, 0.0, 1e-9});
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;
  const ComplexMatrix out = single_qubit_action(relax, excited);
  CHECK(std::abs(out(0, 0) - 1.0) < 1e-6);

  CHECK_THROWS_AS(phase_covariant({0.8, 0.8, 0.5}), NotCPTP);          // eta_par + kappa > 1
  CHECK_THROWS_AS(phase_covariant({0.0, 0.0, 0.0}), ParamOutOfRange);  // eta_perp = 0
}

TEST_CASE("phase_covariant reduces to isotropic depolarization at kappa=0, eta_par=eta_perp") {
  std::mt19937_64 gen(9);
  const ComplexMatrix rho = random_density(1, gen);
  const double eta = 0.42264973081;  // 1 - 1/sqrt(3)
  const KrausChannel pc = phase_covariant({0.0, 1.0 - eta, 1.0 - eta});
  const KrausChannel dep = depolarizing(eta);
  CHECK(max_abs(single_qubit_action(pc, rho) - single_qubit_action(dep, rho)) < 1e-12);
}

TEST_CASE("completeness across parameter grids") {
  for (int i = 0; i <= 49; ++i) {
    const double eta = double(i) / 49.0;
    CHECK(completeness_error(pauli_xy(eta)) <= tol::completeness);
    CHECK(completeness_error(depolarizing(eta)) <= tol::completeness);
    CHECK(completeness_error(amplitude_damping(eta)) <= tol::completeness);
  }
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int emitted = 0;
  while (emitted < 50) {
    PhaseCovariantParams p{2.0 * u(gen) - 1.0, u(gen), 0.5 * u(gen) + 1e-6};
    if (!p.admissible()) continue;
    CHECK(completeness_error(phase_covariant(p)) <= tol::completeness);
    ++emitted;
  }
}

TEST_CASE("phase covariance: channels commute with the phase unitary") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ComplexMatrix rho = random_density(1, gen);
  for (int trial = 0; trial < 20; ++trial) {
    const double phi = 6.28 * u(gen), eta = u(gen);
    const ComplexMatrix uphi = phase_unitary(phi);
    std::vector<KrausChannel> channels = {pauli_xy(eta), depolarizing(eta), amplitude_damping(eta)};
    PhaseCovariantParams p{2.0 * u(gen) - 1.0, u(gen), 0.5 * u(gen) + 1e-6};
    if (p.admissible()) channels.push_back(phase_covariant(p));
    for (const auto& ch : channels) {
      const ComplexMatrix lhs = single_qubit_action(ch, uphi * rho * uphi.adjoint());
      const ComplexMatrix rhs = uphi * single_qubit_action(ch, rho) * uphi.adjoint();
      CHECK(max_abs(lhs - rhs) <= 1e-10);
    }
  }
}

TEST_CASE("phase_unitary basics") {
  CHECK(max_abs(phase_unitary(0.0) - ComplexMatrix::Identity(2, 2)) == 0.0);
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  CHECK(max_abs(phase_unitary(M_PI) - z) < 1e-15);
  CHECK(max_abs(phase_unitary(1.234) * phase_unitary(-1.234) - ComplexMatrix::Identity(2, 2)) <
        1e-15);
}

TEST_CASE("apply_channel on sites of a register") {
  const ComplexVector bell = ghz_state(2);
  const ComplexMatrix rho = bell * bell.adjoint();

  SUBCASE("identity leaves the state alone") {
    const SiteMap all{2, {0, 1}, {}};
    CHECK(max_abs(apply_channel(rho, identity_channel(), all) - rho) < 1e-14);
  }

  SUBCASE("full depolarizing on one half of a Bell pair gives I/4") {
    const SiteMap site0{2, {0}, {}};
    CHECK(max_abs(apply_channel(rho, depolarizing(1.0), site0) -
                  ComplexMatrix::Identity(4, 4) / 4.0) < 1e-14);
  }

  SUBCASE("pauli x-y noise populates the flipped components with eta/2") {
    const double eta = 0.3;
    const SiteMap site0{2, {0}, {}};
    const ComplexMatrix out = apply_channel(rho, pauli_xy(eta), site0);
    CHECK(std::abs(out(1, 1).real() - eta / 2) < 1e-14);  // |01>
    CHECK(std::abs(out(2, 2).real() - eta / 2) < 1e-14);  // |10>
    CHECK(std::abs(out(0, 3).real() - (1 - eta) / 2) < 1e-14);
  }

  SUBCASE("dimension mismatch is rejected") {
    const SiteMap wrong{3, {0}, {}};
    CHECK_THROWS_AS(apply_channel(rho, depolarizing(0.3), wrong), DimensionMismatch);
  }
}

TEST_CASE("fast site kernel agrees with the dense-lift reference") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 4; ++n) {
    const ComplexMatrix rho = random_density(n, gen);
    for (int trial = 0; trial < 4; ++trial) {
      SiteMap sites;
      sites.n_qubits = n;
      for (int s = 0; s < n; ++s)
        if (u(gen) < 0.6) sites.noisy_sites.push_back(s);
      const double eta = u(gen);
      for (const auto& ch : {pauli_xy(eta), depolarizing(eta), amplitude_damping(eta)}) {
        const ComplexMatrix fast = apply_channel(rho, ch, sites);
        const ComplexMatrix ref = apply_channel_reference(rho, ch, sites);
        CHECK(max_abs(fast - ref) < 1e-13);
      }
    }
  }
}

TEST_CASE("apply_channel preserves trace, Hermiticity and positivity") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + int(u(gen) * 2.0);
    const ComplexMatrix rho = random_density(n, gen);
    SiteMap sites;
    sites.n_qubits = n;
    sites.noisy_sites = {0, n - 1};
    const double eta = u(gen);
    for (const auto& ch : {pauli_xy(eta), depolarizing(eta), amplitude_damping(eta)}) {
      const ComplexMatrix out = apply_channel(rho, ch, sites);
      CHECK(std::abs(out.trace().real() - 1.0) <= 1e-10);
      CHECK(hermiticity_error(out) <= 1e-10);
      const EigenDecomposition ed = eigh(out);
      CHECK(ed.eigenvalues.minCoeff() >= -tol::psd_clip);
    }
  }
}
