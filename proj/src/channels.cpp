#include "metrocross/channels.hpp"

#include <cmath>

namespace metrocross {

namespace {

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix sigma_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix sigma_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

void check_unit_interval(double eta, const char* who) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw ParamOutOfRange(std::string(who) + ": eta must lie in [0, 1]");
}

void check_complete(KrausChannel& ch, const char* who) {
  if (completeness_error(ch) > tol::completeness)
    throw NotCPTP(std::string(who) + ": Kraus completeness failed");
}

}  // namespace

std::string channel_kind_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Identity: return "identity";
    case ChannelKind::PauliXY: return "pauli-xy";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::AmplitudeDamping: return "amplitude-damping";
    case ChannelKind::PhaseCovariant: return "phase-covariant";
  }
  throw UnknownChannelKind("channel_kind_name: bad enum value");
}

ChannelKind channel_kind_from_name(const std::string& name) {
  if (name == "identity") return ChannelKind::Identity;
  if (name == "pauli-xy") return ChannelKind::PauliXY;
  if (name == "depolarizing") return ChannelKind::Depolarizing;
  if (name == "amplitude-damping") return ChannelKind::AmplitudeDamping;
  if (name == "phase-covariant") return ChannelKind::PhaseCovariant;
  throw UnknownChannelKind("unknown channel kind: " + name);
}

bool PhaseCovariantParams::admissible(double slack) const {
  if (!(kappa >= -1.0 && kappa <= 1.0)) return false;
  if (!(eta_par >= 0.0 && eta_par <= 1.0)) return false;
  if (!(eta_perp > 0.0 && eta_perp <= 1.0)) return false;
  const bool c1 = eta_par + std::abs(kappa) <= 1.0 + slack;
  const bool c2 = 1.0 + eta_par + slack >= std::sqrt(4.0 * eta_perp * eta_perp + kappa * kappa);
  return c1 && c2;
}

double completeness_error(const KrausChannel& ch) {
  if (ch.kraus.empty()) return 1.0;
  const int d = ch.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus) acc += k.adjoint() * k;
  return max_abs(acc - ComplexMatrix::Identity(d, d));
}

KrausChannel identity_channel() {
  KrausChannel ch;
  ch.kind = ChannelKind::Identity;
  ch.kraus = {ComplexMatrix::Identity(2, 2)};
  return ch;
}

KrausChannel pauli_xy(double eta) {
  check_unit_interval(eta, "pauli_xy");
  KrausChannel ch;
  ch.kind = ChannelKind::PauliXY;
  ch.eta = eta;
  ch.kraus = {std::sqrt(1.0 - eta) * ComplexMatrix::Identity(2, 2),
              std::sqrt(eta / 2.0) * sigma_x(), std::sqrt(eta / 2.0) * sigma_y()};
  check_complete(ch, "pauli_xy");
  return ch;
}

KrausChannel depolarizing(double eta, DepolSymbol symbol) {
  check_unit_interval(eta, "depolarizing");
  KrausChannel ch;
  ch.kind = ChannelKind::Depolarizing;
  ch.eta = eta;
  ch.symbol = symbol;
  ch.kraus = {std::sqrt(1.0 - 3.0 * eta / 4.0) * ComplexMatrix::Identity(2, 2),
              std::sqrt(eta / 4.0) * sigma_x(), std::sqrt(eta / 4.0) * sigma_y(),
              std::sqrt(eta / 4.0) * sigma_z()};
  check_complete(ch, "depolarizing");
  return ch;
}

KrausChannel amplitude_damping(double eta) {
  check_unit_interval(eta, "amplitude_damping");
  KrausChannel ch;
  ch.kind = ChannelKind::AmplitudeDamping;
  ch.eta = eta;
  ComplexMatrix k1(2, 2), k2(2, 2);
  k1 << 1, 0, 0, std::sqrt(1.0 - eta);
  k2 << 0, std::sqrt(eta), 0, 0;
  ch.kraus = {k1, k2};
  check_complete(ch, "amplitude_damping");
  return ch;
}

KrausChannel phase_covariant(const PhaseCovariantParams& p) {
  if (!(p.eta_perp > 0.0 && p.eta_perp <= 1.0))
    throw ParamOutOfRange("phase_covariant: eta_perp must lie in (0, 1]");
  if (!p.admissible(1e-12)) throw NotCPTP("phase_covariant: CPTP conditions violated");

  const double s = std::sqrt(p.kappa * p.kappa + 4.0 * p.eta_perp * p.eta_perp);
  const double t = std::atan2(2.0 * p.eta_perp, p.kappa + s);
  const double lam_plus = (1.0 + p.eta_par + s) / 2.0;
  const double lam_minus = std::max((1.0 + p.eta_par - s) / 2.0, 0.0);

  ComplexMatrix raise(2, 2), lower(2, 2);
  raise << 0, 1, 0, 0;   // |0><1|
  lower << 0, 0, 1, 0;   // |1><0|
  ComplexMatrix d1(2, 2), d2(2, 2);
  d1 << std::cos(t), 0, 0, std::sin(t);
  d2 << -std::sin(t), 0, 0, std::cos(t);

  KrausChannel ch;
  ch.kind = ChannelKind::PhaseCovariant;
  ch.pc = p;
  const double c1 = std::max((1.0 - p.eta_par + p.kappa) / 2.0, 0.0);
  const double c2 = std::max((1.0 - p.eta_par - p.kappa) / 2.0, 0.0);
  ch.kraus = {std::sqrt(c1) * raise, std::sqrt(c2) * lower, std::sqrt(lam_plus) * d1,
              std::sqrt(lam_plus) * d2};
  if (completeness_error(ch) > tol::completeness) {
    ch.kraus[3] = std::sqrt(lam_minus) * d2;
    check_complete(ch, "phase_covariant");
  }
  return ch;
}

KrausChannel make_channel(ChannelKind kind, double eta) {
  switch (kind) {
    case ChannelKind::Identity: return identity_channel();
    case ChannelKind::PauliXY: return pauli_xy(eta);
    case ChannelKind::Depolarizing: return depolarizing(eta);
    case ChannelKind::AmplitudeDamping: return amplitude_damping(eta);
    case ChannelKind::PhaseCovariant:
      throw UnknownChannelKind("make_channel: phase-covariant needs full parameter set");
  }
  throw UnknownChannelKind("make_channel: bad enum value");
}

ComplexMatrix phase_unitary(double phi) {
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  u(1, 1) = std::exp(Complex(0, phi));
  return u;
}

void SiteMap::validate() const {
  if (n_qubits < 1 || n_qubits > 8) throw DimensionMismatch("SiteMap: n_qubits out of range");
  for (int s : noisy_sites)
    if (s < 0 || s >= n_qubits) throw DimensionMismatch("SiteMap: noisy site out of range");
  for (int s : phase_sites)
    if (s < 0 || s >= n_qubits) throw DimensionMismatch("SiteMap: phase site out of range");
}

namespace {

// One Kraus term on one site, without forming the lifted operator: two
// passes of 2x2 row/column mixing over the bit at `site`.
void accumulate_site_term(const ComplexMatrix& rho, const ComplexMatrix& k, int bit_pos,
                          ComplexMatrix& acc, ComplexMatrix& scratch) {
  const Eigen::Index dim = rho.rows();
  const Eigen::Index bit = Eigen::Index(1) << bit_pos;
  const Complex k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);

  // scratch = (K at site) * rho
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const Eigen::Index i1 = i | bit;
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Complex r0 = rho(i, j), r1 = rho(i1, j);
      scratch(i, j) = k00 * r0 + k01 * r1;
      scratch(i1, j) = k10 * r0 + k11 * r1;
    }
  }
  // acc += scratch * (K at site)^dag
  const Complex c00 = std::conj(k00), c01 = std::conj(k01), c10 = std::conj(k10),
                c11 = std::conj(k11);
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j & bit) continue;
    const Eigen::Index j1 = j | bit;
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Complex s0 = scratch(i, j), s1 = scratch(i, j1);
      acc(i, j) += s0 * c00 + s1 * c01;
      acc(i, j1) += s0 * c10 + s1 * c11;
    }
  }
}

void check_apply_inputs(const ComplexMatrix& rho, const KrausChannel& ch, const SiteMap& sites) {
  sites.validate();
  if (ch.dim() != 2) throw DimensionMismatch("apply_channel: channel is not single-qubit");
  const Eigen::Index dim = Eigen::Index(1) << sites.n_qubits;
  if (rho.rows() != dim || rho.cols() != dim)
    throw DimensionMismatch("apply_channel: state dimension does not match SiteMap");
}

}  // namespace

ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausChannel& ch, const SiteMap& sites) {
  check_apply_inputs(rho, ch, sites);
  ComplexMatrix out = rho;
  ComplexMatrix acc(rho.rows(), rho.cols()), scratch(rho.rows(), rho.cols());
  for (int s : sites.noisy_sites) {
    const int bit_pos = sites.n_qubits - 1 - s;  // qubit 0 = MSB
    acc.setZero();
    for (const auto& k : ch.kraus) accumulate_site_term(out, k, bit_pos, acc, scratch);
    out = acc;
  }
  return out;
}

ComplexMatrix apply_channel_reference(const ComplexMatrix& rho, const KrausChannel& ch,
                                      const SiteMap& sites) {
  check_apply_inputs(rho, ch, sites);
  ComplexMatrix out = rho;
  for (int s : sites.noisy_sites) {
    ComplexMatrix acc = ComplexMatrix::Zero(out.rows(), out.cols());
    for (const auto& k : ch.kraus) {
      const ComplexMatrix lifted = embed_at(k, s, sites.n_qubits);
      acc += lifted * out * lifted.adjoint();
    }
    out = acc;
  }
  return out;
}

ComplexMatrix embed_at(const ComplexMatrix& op, int site, int n_qubits) {
  if (site < 0 || site >= n_qubits) throw DimensionMismatch("embed_at: site out of range");
  const Eigen::Index left = Eigen::Index(1) << site;
  const Eigen::Index right = Eigen::Index(1) << (n_qubits - 1 - site);
  ComplexMatrix out = kron(ComplexMatrix::Identity(left, left), op);
  return kron(out, ComplexMatrix::Identity(right, right));
}

}  // namespace metrocross
