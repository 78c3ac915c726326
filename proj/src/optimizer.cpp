#include "metrocross/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "metrocross/parallel.hpp"

namespace metrocross {

void OptimizerOptions::validate() const {
  if (n_starts < 1) throw ParamOutOfRange("OptimizerOptions: n_starts must be >= 1");
  if (!(f_tol > 0.0) || !(x_tol > 0.0))
    throw ParamOutOfRange("OptimizerOptions: tolerances must be positive");
  if (max_iters < 1) throw ParamOutOfRange("OptimizerOptions: max_iters must be >= 1");
}

// --- state chart ----------------------------------------------------------

StateParametrization::StateParametrization(int n_qubits, bool restrict_real,
                                           bool restrict_symmetric)
    : n_qubits_(n_qubits), real_(restrict_real), symmetric_(restrict_symmetric) {
  if (n_qubits < 1 || n_qubits > 8)
    throw ParamOutOfRange("StateParametrization: n_qubits out of range");
  if (symmetric_) {
    const int dim = 1 << n_qubits_;
    class_of_index_.resize(dim);
    class_rep_index_.assign(n_qubits_ + 1, -1);
    for (int idx = 0; idx < dim; ++idx) {
      const int c = std::popcount(unsigned(idx));
      class_of_index_[idx] = c;
      if (class_rep_index_[c] < 0) class_rep_index_[c] = idx;
    }
  }
}

int StateParametrization::param_count() const {
  const int amplitudes = symmetric_ ? n_qubits_ + 1 : (1 << n_qubits_);
  return (real_ ? 1 : 2) * (amplitudes - 1);
}

ComplexVector StateParametrization::decode(const std::vector<double>& params) const {
  if (int(params.size()) != param_count())
    throw BadLength("StateParametrization::decode: wrong parameter count");
  const int dim = 1 << n_qubits_;
  const int amplitudes = symmetric_ ? n_qubits_ + 1 : dim;

  std::vector<Complex> amp(amplitudes);
  amp[0] = 1.0;
  for (int k = 1; k < amplitudes; ++k)
    amp[k] = real_ ? Complex(params[k - 1], 0.0)
                   : Complex(params[2 * (k - 1)], params[2 * (k - 1) + 1]);

  ComplexVector v(dim);
  if (symmetric_) {
    for (int idx = 0; idx < dim; ++idx) v[idx] = amp[class_of_index_[idx]];
  } else {
    for (int idx = 0; idx < dim; ++idx) v[idx] = amp[idx];
  }
  return v / v.norm();
}

std::vector<double> StateParametrization::encode(const ComplexVector& state) const {
  const int dim = 1 << n_qubits_;
  if (state.size() != dim) throw BadLength("StateParametrization::encode: wrong state size");
  const Complex anchor = state[0];
  if (std::abs(anchor) < 1e-12)
    throw BadLength("StateParametrization::encode: first amplitude vanishes, chart not defined");

  const int amplitudes = symmetric_ ? n_qubits_ + 1 : dim;
  std::vector<double> params(param_count(), 0.0);
  for (int k = 1; k < amplitudes; ++k) {
    const int idx = symmetric_ ? class_rep_index_[k] : k;
    const Complex z = state[idx] / anchor;
    if (real_) {
      params[k - 1] = z.real();
    } else {
      params[2 * (k - 1)] = z.real();
      params[2 * (k - 1) + 1] = z.imag();
    }
  }
  return params;
}

// --- deterministic start generation ---------------------------------------

namespace {

class BoxMuller {
 public:
  explicit BoxMuller(std::uint64_t seed) : gen_(seed) {}

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * M_PI * u2);
    have_cached_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  double uniform() { return std::ldexp(double(gen_() >> 11), -53); }  // [0, 1)

  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// --- Nelder-Mead with adaptive coefficients and shrinking restarts ---------

struct LocalResult {
  double value = -std::numeric_limits<double>::infinity();  // maximized objective
  std::vector<double> params;
  bool converged = false;
};

using VecD = std::vector<double>;

double nm_penalized(const std::function<double(const VecD&)>& neg_f, const VecD& x) {
  const double v = neg_f(x);
  return std::isfinite(v) ? v : 1e100;
}

// Minimizes neg_f from x0. One simplex round; returns best vertex in place.
bool nelder_mead_round(const std::function<double(const VecD&)>& neg_f, VecD& x0, double& f0,
                       double simplex_scale, int max_iters, double f_tol, double x_tol) {
  const int m = int(x0.size());
  if (m == 0) {
    f0 = nm_penalized(neg_f, x0);
    return true;
  }
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / m;           // expansion
  const double gamma = 0.75 - 1.0 / (2.0 * m); // contraction
  const double delta = 1.0 - 1.0 / m;          // shrink

  std::vector<VecD> x(m + 1, x0);
  VecD f(m + 1);
  for (int i = 1; i <= m; ++i) x[i][i - 1] += simplex_scale;
  for (int i = 0; i <= m; ++i) f[i] = nm_penalized(neg_f, x[i]);

  std::vector<int> order(m + 1);
  bool converged = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });
    const int best = order[0], worst = order[m], second_worst = order[m - 1];

    double x_spread = 0.0;
    for (int i = 0; i <= m; ++i)
      for (int k = 0; k < m; ++k)
        x_spread = std::max(x_spread, std::abs(x[i][k] - x[best][k]));
    if (f[worst] - f[best] <= f_tol && x_spread <= x_tol) {
      converged = true;
      break;
    }

    VecD centroid(m, 0.0);
    for (int i = 0; i <= m; ++i) {
      if (i == worst) continue;
      for (int k = 0; k < m; ++k) centroid[k] += x[i][k];
    }
    for (int k = 0; k < m; ++k) centroid[k] /= m;

    auto blend = [&](double coeff) {
      VecD p(m);
      for (int k = 0; k < m; ++k) p[k] = centroid[k] + coeff * (centroid[k] - x[worst][k]);
      return p;
    };

    const VecD xr = blend(alpha);
    const double fr = nm_penalized(neg_f, xr);
    if (fr < f[best]) {
      const VecD xe = blend(alpha * beta);
      const double fe = nm_penalized(neg_f, xe);
      if (fe < fr) {
        x[worst] = xe;
        f[worst] = fe;
      } else {
        x[worst] = xr;
        f[worst] = fr;
      }
    } else if (fr < f[second_worst]) {
      x[worst] = xr;
      f[worst] = fr;
    } else {
      const bool outside = fr < f[worst];
      const VecD xc = blend(outside ? alpha * gamma : -gamma);
      const double fc = nm_penalized(neg_f, xc);
      if (fc < (outside ? fr : f[worst])) {
        x[worst] = xc;
        f[worst] = fc;
      } else {
        for (int i = 0; i <= m; ++i) {
          if (i == order[0]) continue;
          for (int k = 0; k < m; ++k)
            x[i][k] = x[order[0]][k] + delta * (x[i][k] - x[order[0]][k]);
          f[i] = nm_penalized(neg_f, x[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= m; ++i)
    if (f[i] < f[best]) best = i;
  x0 = x[best];
  f0 = f[best];
  return converged;
}

LocalResult local_search(const std::function<double(const VecD&)>& neg_f, VecD x0,
                         const OptimizerOptions& opt) {
  LocalResult out;
  double f0 = nm_penalized(neg_f, x0);
  bool converged = false;
  // Shrinking-restart schedule: a broad round then two polish rounds.
  const double scales[] = {0.25, 0.02, 5e-4};
  for (double scale : scales) {
    const double before = f0;
    converged = nelder_mead_round(neg_f, x0, f0, scale, opt.max_iters, opt.f_tol, opt.x_tol);
    if (converged && before - f0 <= opt.f_tol && scale < 0.25) break;
  }
  out.value = -f0;
  out.params = std::move(x0);
  out.converged = converged && std::isfinite(out.value);
  return out;
}

}  // namespace

// --- multi-start driver -----------------------------------------------------

ConvergenceReport maximize(const std::function<double(const ComplexVector&)>& objective,
                           int n_qubits, const OptimizerOptions& opt,
                           const std::vector<ComplexVector>& extra_seeds) {
  opt.validate();
  const StateParametrization chart(n_qubits, opt.restrict_real, opt.restrict_symmetric);
  const int dim = 1 << n_qubits;

  // Structured seeds, in tie-break priority order.
  std::vector<ComplexVector> seeds = {ghz_state(n_qubits), plus_state(n_qubits)};
  for (const auto& s : extra_seeds) seeds.push_back(s);
  seeds.push_back(basis_state(n_qubits, 0));

  auto encodable = [&](ComplexVector s) -> std::vector<double> {
    if (s.size() != dim) throw BadLength("maximize: seed state has wrong dimension");
    if (std::abs(s[0]) < 1e-8) s = (s + 1e-6 * basis_state(n_qubits, 0)).normalized();
    std::vector<double> q = chart.encode(s);
    // Restricted charts cannot express every seed; keep only faithful ones.
    const ComplexVector back = chart.decode(q);
    if (std::abs(back.dot(s)) < 1.0 - 1e-9) return {};
    return q;
  };

  std::vector<VecD> starts;
  for (const auto& s : seeds) {
    try {
      VecD q = encodable(s);
      if (!q.empty()) starts.push_back(std::move(q));
    } catch (const BadLength&) {
      // seed not representable in this chart; skip
    }
  }
  const int n_structured = int(starts.size());
  const int n_total = std::max(opt.n_starts, n_structured);
  for (int i = n_structured; i < n_total; ++i) {
    BoxMuller rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * std::uint64_t(i + 1)));
    VecD q(chart.param_count());
    for (double& v : q) v = rng.normal();
    starts.push_back(std::move(q));
  }

  auto neg_f = [&](const VecD& q) { return -objective(chart.decode(q)); };

  std::vector<LocalResult> results(starts.size());
  parallel_for(std::ptrdiff_t(starts.size()),
               [&](std::ptrdiff_t i) { results[i] = local_search(neg_f, starts[i], opt); });

  // Ordered reduction: deterministic regardless of thread schedule.
  double best_value = -std::numeric_limits<double>::infinity();
  for (const auto& r : results) best_value = std::max(best_value, r.value);
  if (!std::isfinite(best_value))
    throw OptimizerFailure("maximize: no start produced a finite objective");

  // Guard: never report worse than the best structured seed; re-polish if a
  // seed value beats every local optimum.
  for (int i = 0; i < n_structured; ++i) {
    const double seed_value = -nm_penalized(neg_f, starts[i]);
    if (seed_value > best_value + opt.f_tol) {
      results[i] = local_search(neg_f, starts[i], opt);
      results[i].value = std::max(results[i].value, seed_value);
      best_value = std::max(best_value, results[i].value);
    }
  }

  const ComplexVector anchor = seeds.front();
  int pick = -1;
  double pick_overlap = -1.0;
  int converged = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.converged) {
      ++converged;
      lo = std::min(lo, r.value);
      hi = std::max(hi, r.value);
    }
    if (r.value >= best_value - opt.f_tol) {
      const double overlap = std::norm(anchor.dot(chart.decode(r.params)));
      if (overlap > pick_overlap + 1e-15) {
        pick = int(i);
        pick_overlap = overlap;
      }
    }
  }
  if (pick < 0) throw OptimizerFailure("maximize: no admissible start");

  ConvergenceReport report;
  report.best_value = results[pick].value;
  report.best_params = results[pick].params;
  report.best_state = chart.decode(results[pick].params);
  report.starts_converged = converged;
  report.spread = converged > 0 ? hi - lo : 0.0;
  return report;
}

}  // namespace metrocross
