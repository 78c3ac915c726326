#pragma once

#include <string>
#include <vector>

#include "metrocross/numerics.hpp"

namespace metrocross {

enum class ChannelKind { Identity, PauliXY, Depolarizing, AmplitudeDamping, PhaseCovariant };

std::string channel_kind_name(ChannelKind kind);
ChannelKind channel_kind_from_name(const std::string& name);  // throws UnknownChannelKind

// Which symbol the caller used for the depolarizing parameter. Numerically
// identical roles; recorded for CSV labeling only.
enum class DepolSymbol { Eta, T };

// Bloch-picture parameters of the general phase-covariant qubit map:
// kappa displaces along z, eta_par scales z, eta_perp scales the x-y plane.
struct PhaseCovariantParams {
  double kappa = 0.0;
  double eta_par = 1.0;
  double eta_perp = 1.0;

  // CPTP admissibility: eta_par + |kappa| <= 1 and 1 + eta_par >= sqrt(4 eta_perp^2 + kappa^2).
  bool admissible(double slack = 0.0) const;
};

struct KrausChannel {
  ChannelKind kind = ChannelKind::Identity;
  std::vector<ComplexMatrix> kraus;  // 2x2 each
  double eta = 0.0;                  // noise parameter for the single-parameter families
  PhaseCovariantParams pc{};         // set when kind == PhaseCovariant
  DepolSymbol symbol = DepolSymbol::Eta;

  int dim() const { return kraus.empty() ? 0 : int(kraus.front().rows()); }
};

// max |sum K_i^dag K_i - I|.
double completeness_error(const KrausChannel& ch);

KrausChannel identity_channel();

// {sqrt(1-eta) I, sqrt(eta/2) sigma_x, sqrt(eta/2) sigma_y}.
KrausChannel pauli_xy(double eta);

// {sqrt(1-3eta/4) I, sqrt(eta/4) sigma_{x,y,z}}; action (1-eta) rho + eta I/2.
KrausChannel depolarizing(double eta, DepolSymbol symbol = DepolSymbol::Eta);

// K1 = diag(1, sqrt(1-eta)), K2 = sqrt(eta) |0><1|.
KrausChannel amplitude_damping(double eta);

// General phase-covariant map, four Kraus operators. The two diagonal
// operators carry sqrt(lambda+) and sqrt(lambda-): the construction verifies
// completeness with both prefactors equal to sqrt(lambda+) first and falls
// back to sqrt(lambda-) in the fourth operator when that fails (which it
// does everywhere except at lambda+ = lambda-). See doc/notes in README.
KrausChannel phase_covariant(const PhaseCovariantParams& p);

// Channel with the given kind at the given noise parameter (single-parameter
// families only; PhaseCovariant needs phase_covariant()).
KrausChannel make_channel(ChannelKind kind, double eta);

// diag(1, e^{i phi}).
ComplexMatrix phase_unitary(double phi);

// Which qubits of an n-qubit register see noise and which see the phase.
// Qubit 0 is the most significant bit of the basis index.
struct SiteMap {
  int n_qubits = 1;
  std::vector<int> noisy_sites;
  std::vector<int> phase_sites;

  void validate() const;  // throws DimensionMismatch on bad indices
};

// rho <- product over noisy sites of (sum_i K_i rho K_i^dag) with K_i acting
// on that site only. Single-qubit maps on disjoint qubits commute, so the
// sequential order does not matter.
ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausChannel& ch, const SiteMap& sites);

// Same contract via dense lifted operators I (x) K (x) I. Slower; kept as the
// reference implementation the fast bit-indexed kernel is tested against.
ComplexMatrix apply_channel_reference(const ComplexMatrix& rho, const KrausChannel& ch,
                                      const SiteMap& sites);

// Lift a single-qubit operator to `site` of an n-qubit register.
ComplexMatrix embed_at(const ComplexMatrix& op, int site, int n_qubits);

}  // namespace metrocross
