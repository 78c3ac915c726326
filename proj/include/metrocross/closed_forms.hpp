#pragma once

#include "metrocross/errors.hpp"

namespace metrocross::closed_forms {

// Reference expressions for the optimal-state QFIs of the three noise
// families, evaluated per block. "Per block" means one use of every channel
// in the block; strategy totals multiply by the block repetition count.
// Each expression is pinned against the spectral-QFI pipeline in the tests;
// normalization notes are given per function.

// Pauli x-y, Bell probe entangled with a noiseless ancilla (per block, one
// channel use): 1 - eta.
double xy_ancilla_block_qfi(double eta);

// Pauli x-y, Bell probe with both qubits through the channel (per block,
// two uses): 4 (1-eta)^4 / (2 eta^2 - 2 eta + 1).
double xy_parallel_bell_qfi(double eta);

// Depolarizing, Bell probe + ancilla (per block, one use): 2 (1-eta)^2 / (2-eta).
double depol_ancilla_block_qfi(double eta);

// Amplitude damping: amplitude of |00> in the optimal probe-ancilla state
// alpha(eta) |00> + sqrt(1-alpha^2) |11>.
double adc_alpha(double eta);

// Amplitude damping, optimal probe-ancilla block (per block, one use):
// 4 (1-eta) / (1 + sqrt(1-eta))^2. The companion per-two-uses value
// J = 2x this block value is what adc_ancilla_total_qfi returns.
double adc_ancilla_block_qfi(double eta);
double adc_ancilla_total_qfi(double eta);  // 8 (1-eta) / (1 + sqrt(1-eta))^2

// Amplitude damping: amplitude of |00> in the optimal two-probe state
// eps(eta) |00> + sqrt(1-eps^2) |11> (valid while that family is optimal,
// eta up to about 0.58). Equals sqrt(sqrt(m)/(1+sqrt(m))), m = 2 eta^2 - 2 eta + 1.
double adc_epsilon(double eta);

// Amplitude damping, optimal two-probe state, both qubits through the
// channel (per block, two uses): 16 (1-eta)^2 / (1 + sqrt(2 eta^2 - 2 eta + 1))^2.
// Convention note: the tabulated source expression for this quantity is
// written in the efficiency variable (1 - eta); evaluated that way it agrees
// with the spectral pipeline to 1e-7 across the family's validity range,
// whereas a literal reading disagrees by up to 5x. The pinned form here is
// the oracle-validated one.
double adc_parallel_two_probe_qfi(double eta);

// Best unentangled ancilla-free probe (|+>), per single use:
// (1-eta)^2 for pauli x-y and depolarizing, (1-eta) for amplitude damping.
double classical_block_qfi_xy_or_depol(double eta);
double classical_block_qfi_adc(double eta);

}  // namespace metrocross::closed_forms
