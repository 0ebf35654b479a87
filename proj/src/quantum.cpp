#include "nsbox/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nsbox/nelder_mead.hpp"
#include "nsbox/nonlocality.hpp"
#include "nsbox/rng.hpp"

namespace nsbox {

TwoQubitState TwoQubitState::schmidt(double alpha) {
  TwoQubitState s;
  s.amplitudes = {std::cos(alpha), 0.0, 0.0, std::sin(alpha)};
  return s;
}

double TwoQubitState::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amplitudes) n += std::norm(a);
  return n;
}

namespace {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;  // row-major 2x2

// (I + (-1)^outcome n.sigma)/2 for the Bloch direction of the measurement.
Mat2 projector(const QubitMeasurement& m, int outcome) {
  double sign = outcome == 0 ? 1.0 : -1.0;
  double nx = std::sin(m.theta) * std::cos(m.phi);
  double ny = std::sin(m.theta) * std::sin(m.phi);
  double nz = std::cos(m.theta);
  return {C(0.5 * (1.0 + sign * nz), 0.0), C(0.5 * sign * nx, -0.5 * sign * ny),
          C(0.5 * sign * nx, 0.5 * sign * ny), C(0.5 * (1.0 - sign * nz), 0.0)};
}

double expectation(const TwoQubitState& psi, const Mat2& pa, const Mat2& pb) {
  C acc(0.0, 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      C phi(0.0, 0.0);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          phi += pa[2 * i + k] * pb[2 * j + l] * psi.amplitudes[2 * k + l];
      acc += std::conj(psi.amplitudes[2 * i + j]) * phi;
    }
  return acc.real();
}

}  // namespace

Behavior born_probabilities(const QuantumScenario& scenario) {
  Behavior::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Mat2 pa0 = projector(scenario.alice[x], 0);
      Mat2 pa1 = projector(scenario.alice[x], 1);
      Mat2 pb0 = projector(scenario.bob[y], 0);
      Mat2 pb1 = projector(scenario.bob[y], 1);
      t[Behavior::index(x, y, 0, 0)] = expectation(scenario.state, pa0, pb0);
      t[Behavior::index(x, y, 0, 1)] = expectation(scenario.state, pa0, pb1);
      t[Behavior::index(x, y, 1, 0)] = expectation(scenario.state, pa1, pb0);
      t[Behavior::index(x, y, 1, 1)] = expectation(scenario.state, pa1, pb1);
    }
  return Behavior(t);
}

namespace {

QuantumScenario scenario_from_params(std::span<const double> p, bool full_bloch) {
  QuantumScenario s;
  s.state = TwoQubitState::schmidt(p[0]);
  if (full_bloch) {
    s.alice[0] = {p[1], p[2]};
    s.alice[1] = {p[3], p[4]};
    s.bob[0] = {p[5], p[6]};
    s.bob[1] = {p[7], p[8]};
  } else {
    s.alice[0] = {p[1], 0.0};
    s.alice[1] = {p[2], 0.0};
    s.bob[0] = {p[3], 0.0};
    s.bob[1] = {p[4], 0.0};
  }
  return s;
}

// theta folded into [0,pi], phi into [0,2pi), same Bloch direction.
QubitMeasurement canonical(QubitMeasurement m) {
  const double tau = 2.0 * std::numbers::pi;
  m.theta = std::fmod(m.theta, tau);
  if (m.theta < 0.0) m.theta += tau;
  if (m.theta > std::numbers::pi) {
    m.theta = tau - m.theta;
    m.phi += std::numbers::pi;
  }
  m.phi = std::fmod(m.phi, tau);
  if (m.phi < 0.0) m.phi += tau;
  return m;
}

struct ConstrainedProblem {
  bool subtract_q1 = false;  // objective q4 - q1 instead of q4
  bool constrain_q1 = false; // q1 itself is a zero constraint
  bool full_bloch = false;
  double mu = 0.0;

  double objective_value(const Behavior& b) const {
    return subtract_q1 ? cabello_success(b) : hardy_success(b);
  }

  std::vector<double> residuals(const Behavior& b) const {
    std::vector<double> r = {b(1, 0, 1, 1), b(0, 1, 1, 1)};
    if (constrain_q1) r.push_back(b(0, 0, 0, 0));
    return r;
  }

  double operator()(std::span<const double> p) const {
    Behavior b = born_probabilities(scenario_from_params(p, full_bloch));
    double penalty = 0.0;
    // The residuals are probabilities, quadratic in parameter perturbations,
    // so the objective gains O(sqrt(r)) from a violation r and a quadratic
    // penalty converges too slowly in mu.  A linear penalty is exact here.
    for (double r : residuals(b)) penalty += std::abs(r);
    return -objective_value(b) + mu * penalty;
  }
};

QuantumOptimum optimize(const OptimizerConfig& config, bool cabello) {
  ConstrainedProblem problem;
  problem.subtract_q1 = cabello;
  problem.constrain_q1 = !cabello;
  problem.full_bloch = config.full_bloch;

  const std::size_t dim = config.full_bloch ? 9 : 5;
  NelderMeadOptions options;
  options.max_iterations = config.max_iterations;
  options.initial_step = 0.3;

  bool found = false;
  double best_value = 0.0;
  std::vector<double> best_params;

  for (int s = 0; s < config.starts; ++s) {
    SplitMix64 rng = SplitMix64::stream(config.seed, static_cast<std::uint64_t>(s));
    std::vector<double> p(dim);
    p[0] = rng.next_in(0.05, std::numbers::pi / 2.0 - 0.05);
    for (std::size_t i = 1; i < dim; ++i) p[i] = rng.next_in(0.0, std::numbers::pi);

    for (double mu = 1e0; mu <= 1e8; mu *= 100.0) {
      problem.mu = mu;
      p = nelder_mead(std::cref(problem), p, options).x;
    }
    NelderMeadOptions polish = options;
    polish.initial_step = 0.01;
    double previous = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 40; ++round) {
      NelderMeadResult refined = nelder_mead(std::cref(problem), p, polish);
      p = refined.x;
      if (previous - refined.value < 1e-13) break;
      previous = refined.value;
      polish.initial_step = std::max(polish.initial_step * 0.5, 1e-6);
    }

    double worst = 0.0;
    Behavior probe = born_probabilities(scenario_from_params(p, config.full_bloch));
    for (double r : problem.residuals(probe)) worst = std::max(worst, std::abs(r));
    if (worst >= config.constraint_tolerance) continue;

    Behavior b = born_probabilities(scenario_from_params(p, config.full_bloch));
    double value = problem.objective_value(b);
    if (!found || value > best_value) {
      found = true;
      best_value = value;
      best_params = p;
    }
  }

  if (!found)
    throw ConvergenceError("no start satisfied the zero constraints to " +
                           std::to_string(config.constraint_tolerance));

  QuantumScenario scenario = scenario_from_params(best_params, config.full_bloch);
  for (auto& m : scenario.alice) m = canonical(m);
  for (auto& m : scenario.bob) m = canonical(m);

  QuantumOptimum out;
  out.scenario = scenario;
  out.behavior = born_probabilities(scenario);
  out.value = problem.objective_value(out.behavior);
  out.max_residual = 0.0;
  for (double r : problem.residuals(out.behavior))
    out.max_residual = std::max(out.max_residual, std::abs(r));
  return out;
}

}  // namespace

QuantumOptimum optimize_hardy_quantum(const OptimizerConfig& config) {
  return optimize(config, false);
}

QuantumOptimum optimize_cabello_quantum(const OptimizerConfig& config) {
  return optimize(config, true);
}

}  // namespace nsbox
