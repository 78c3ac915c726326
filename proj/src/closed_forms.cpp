#include "metrocross/closed_forms.hpp"

#include <cmath>

namespace metrocross::closed_forms {

namespace {
void check_range(double eta, const char* who) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ParamOutOfRange(std::string(who) + ": eta outside [0, 1]");
}
}  // namespace

double xy_ancilla_block_qfi(double eta) {
  check_range(eta, "xy_ancilla_block_qfi");
  return 1.0 - eta;
}

double xy_parallel_bell_qfi(double eta) {
  check_range(eta, "xy_parallel_bell_qfi");
  const double u = 1.0 - eta;
  return 4.0 * u * u * u * u / (2.0 * eta * eta - 2.0 * eta + 1.0);
}

double depol_ancilla_block_qfi(double eta) {
  check_range(eta, "depol_ancilla_block_qfi");
  return 2.0 * (1.0 - eta) * (1.0 - eta) / (2.0 - eta);
}

double adc_alpha(double eta) {
  check_range(eta, "adc_alpha");
  const double r = std::sqrt(1.0 - eta);
  return std::sqrt(r / (1.0 + r));
}

double adc_ancilla_block_qfi(double eta) {
  check_range(eta, "adc_ancilla_block_qfi");
  const double r = std::sqrt(1.0 - eta);
  return 4.0 * (1.0 - eta) / ((1.0 + r) * (1.0 + r));
}

double adc_ancilla_total_qfi(double eta) { return 2.0 * adc_ancilla_block_qfi(eta); }

double adc_epsilon(double eta) {
  check_range(eta, "adc_epsilon");
  const double m = 2.0 * eta * eta - 2.0 * eta + 1.0;
  const double rm = std::sqrt(m);
  return std::sqrt(rm / (1.0 + rm));
}

double adc_parallel_two_probe_qfi(double eta) {
  check_range(eta, "adc_parallel_two_probe_qfi");
  const double m = 2.0 * eta * eta - 2.0 * eta + 1.0;
  const double d = 1.0 + std::sqrt(m);
  return 16.0 * (1.0 - eta) * (1.0 - eta) / (d * d);
}

double classical_block_qfi_xy_or_depol(double eta) {
  check_range(eta, "classical_block_qfi_xy_or_depol");
  return (1.0 - eta) * (1.0 - eta);
}

double classical_block_qfi_adc(double eta) {
  check_range(eta, "classical_block_qfi_adc");
  return 1.0 - eta;
}

}  // namespace metrocross::closed_forms
